#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logchern/rational.hpp"

namespace logchern {

inline constexpr int kDefaultTruncation = 5;

struct Generator {
  std::string name;
  int degree = 1;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered list of polynomial generators. Names are unique and every degree
/// is at least one. The list order fixes the canonical monomial order.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  auto begin() const { return generators_.begin(); }
  auto end() const { return generators_.end(); }

  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<Generator> generators_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

// Standard generator sets used across the library.
GeneratorSetPtr chern_roots(int r);              // a1..ar, all of degree 1
GeneratorSetPtr ch_symbols(int max_degree);      // e1..eD, deg e_k = k (stand for ch_k of a base bundle)
GeneratorSetPtr chern_class_symbols(int max_degree);  // c1..cD, deg c_k = k
GeneratorSetPtr power_sum_symbols(int max_degree);    // p1..pD, deg p_k = k

bool same_generators(const GeneratorSetPtr& a, const GeneratorSetPtr& b);

struct Monomial {
  int degree = 0;  // weighted total degree
  std::vector<int> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic: lower weighted degree first; within a degree the
// monomial with the larger exponent on an earlier generator comes first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exponents > b.exponents;
  }
};

/// Element of a free graded-commutative polynomial algebra over Q, truncated
/// above a fixed weighted degree. Terms above the truncation degree and zero
/// coefficients are never stored.
class GradedPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  GradedPoly(GeneratorSetPtr generators, int truncation = kDefaultTruncation);

  static GradedPoly constant(GeneratorSetPtr generators, int truncation, const Rational& value);
  static GradedPoly generator(GeneratorSetPtr generators, int truncation, std::size_t index);
  static GradedPoly generator(GeneratorSetPtr generators, int truncation, std::string_view name);
  // Parses the canonical text form (whitespace-insensitive), e.g. "1 - 11/10*e1^2 + 5*e2".
  static GradedPoly parse(std::string_view text, GeneratorSetPtr generators, int truncation);

  const GeneratorSetPtr& generators() const { return generators_; }
  int truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational constant_term() const;
  Rational coefficient(const std::vector<int>& exponents) const;
  // Largest weighted degree present, or -1 for the zero polynomial.
  int max_degree() const;
  bool is_homogeneous(int degree) const;

  GradedPoly homogeneous_part(int degree) const;
  // Same generators, new truncation; raising the bound keeps all terms.
  GradedPoly with_truncation(int truncation) const;

  // Adds coeff * x^exponents; silently dropped when above the truncation degree.
  void add_term(const std::vector<int>& exponents, const Rational& coeff);

  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const GradedPoly& other);
  GradedPoly& operator*=(const Rational& scalar);
  GradedPoly& operator/=(const Rational& scalar);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& s) { return a *= s; }
  friend GradedPoly operator*(const Rational& s, GradedPoly a) { return a *= s; }
  friend GradedPoly operator/(GradedPoly a, const Rational& s) { return a /= s; }
  GradedPoly operator-() const;

  GradedPoly pow(unsigned exponent) const;

  // Replaces generator i by images[i]; all images share one ring, which is the
  // ring of the result.
  GradedPoly substitute(std::span<const GradedPoly> images) const;

  std::string to_string() const;

  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

 private:
  int weighted_degree(const std::vector<int>& exponents) const;
  void require_compatible(const GradedPoly& other, const char* op) const;

  GeneratorSetPtr generators_;
  int truncation_;
  TermMap terms_;
};

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b);
GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b);
// Truncated exponential; the argument must have zero constant term.
GradedPoly poly_exp(const GradedPoly& a);
// Truncated logarithm; the argument must have constant term 1.
GradedPoly poly_log(const GradedPoly& a);

// Returns lambda with x == lambda * y, or nullopt when no such scalar exists.
// For y == 0 the answer is 0 if x == 0 and nullopt otherwise.
std::optional<Rational> proportionality_factor(const GradedPoly& x, const GradedPoly& y);

}  // namespace logchern
