#pragma once

#include <vector>

#include "logchern/graded_poly.hpp"
#include "logchern/rational.hpp"

namespace logchern {

/// Formal (possibly virtual) bundle character: ch_0 = rank plus graded
/// components ch_1..ch_D, each homogeneous of its degree over one shared
/// coefficient ring truncated at D.
class BundleCharacter {
 public:
  BundleCharacter(Rational rank, std::vector<GradedPoly> components);

  // Splits a total character 1*ch_0 + ch_1 + ... + ch_D by degree.
  static BundleCharacter from_total(const GradedPoly& total);

  const Rational& rank() const { return rank_; }
  int max_degree() const { return static_cast<int>(components_.size()); }
  const GeneratorSetPtr& generators() const { return components_.front().generators(); }
  // ch_k for 1 <= k <= D; ch(0) is the rank as a constant polynomial.
  GradedPoly ch(int k) const;
  const std::vector<GradedPoly>& components() const { return components_; }
  GradedPoly total() const;

  friend bool operator==(const BundleCharacter&, const BundleCharacter&) = default;

 private:
  Rational rank_;
  std::vector<GradedPoly> components_;
};

struct DiscriminantVector {
  std::vector<GradedPoly> entries;  // entries[k-1] = Delta_k

  const GradedPoly& operator[](int k) const { return entries.at(static_cast<std::size_t>(k - 1)); }
  int size() const { return static_cast<int>(entries.size()); }
};

struct ChernClassVector {
  std::vector<GradedPoly> classes;  // classes[k-1] = c_k

  const GradedPoly& operator[](int k) const { return classes.at(static_cast<std::size_t>(k - 1)); }
  int size() const { return static_cast<int>(classes.size()); }
};

// Generic bundle of rank r: ch_k = e_k for 1 <= k <= D.
BundleCharacter base_bundle(const Rational& rank, int D);
// Same ring as `like`, character = rank (no higher components).
BundleCharacter trivial_bundle(const Rational& rank, const GeneratorSetPtr& gens, int D);
// Line bundle with first Chern class c1 (a degree-1 polynomial): ch = exp(c1).
BundleCharacter line_bundle(const GradedPoly& c1);
// Character of the virtual representation P_d: rank r, ch_k = d^k e_k.
BundleCharacter power_sum_character(int d, const Rational& rank, int D);

BundleCharacter direct_sum(const BundleCharacter& a, const BundleCharacter& b);
BundleCharacter tensor(const BundleCharacter& a, const BundleCharacter& b);
BundleCharacter scale(const BundleCharacter& a, const Rational& factor);
// Keeps ch_0..ch_D and drops the generators of degree above D from the ring.
BundleCharacter truncate(const BundleCharacter& a, int D);

// Log_+ = log(ch / ch_0), with zero constant term.
GradedPoly log_character(const BundleCharacter& a);

// Delta_1..Delta_{up_to}, read off from Log_+ as
// Delta_k = (-1)^{k+1} k ch_0^k [Log_+]_k.
DiscriminantVector discriminants(const BundleCharacter& a, int up_to);
// The closed expansions of Delta_k in ch_0..ch_k, for 1 <= k <= 5.
GradedPoly explicit_discriminant(const BundleCharacter& a, int k);

// d_k = Delta_k / (k ch_0^{k-1}).
GradedPoly d_k(const BundleCharacter& a, int k);

// Delta_{4,t} = t ch1^4 - 4t ch0 ch1^2 ch2 + 2 ch0^2 ((t+1) ch2^2 + 2(t-1) ch1 ch3) - 4(t-1) ch0^3 ch4.
GradedPoly delta4t(const BundleCharacter& a, const Rational& t);

// (r+1) Delta_4 - Delta_2^2 for k = 4, (r+5) Delta_5 - 5 Delta_2 Delta_3 for k = 5.
GradedPoly modified_delta(const BundleCharacter& a, int k);

// Chern classes through Newton's identities with p_k = k! ch_k.
ChernClassVector chern_classes(const BundleCharacter& a);
// Inverse of chern_classes for an honest rank r: classes above r must vanish.
BundleCharacter from_chern_classes(const Rational& rank, const ChernClassVector& classes);
// Rank-r bundle with free Chern classes c_1..c_min(r,D) (c_i = 0 for i > r).
BundleCharacter chern_class_bundle(int r, int D);

// Rewrites a character over e1..eD (ch_k of a base bundle) or c1..cD (its Chern
// classes) in terms of the r Chern roots of the base bundle. Two characters
// describe the same class for every rank-r base bundle iff their images agree.
BundleCharacter specialize_to_roots(const BundleCharacter& a, int r);
bool equal_on_rank(const BundleCharacter& a, const BundleCharacter& b, int r);
// A single homogeneous class over e1..eD or c1..cD, written in the r Chern roots.
GradedPoly class_in_roots(const GradedPoly& x, int r);

}  // namespace logchern
