#pragma once

#include <random>
#include <string>

#include "logchern/bundle.hpp"
#include "logchern/graded_poly.hpp"

namespace logchern::testing {

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 6) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

// Random element of the ring with the given constant term; roughly `terms`
// attempts at monomials of weighted degree 1..D.
inline GradedPoly random_poly(const GeneratorSetPtr& gens, int D, std::mt19937_64& rng, const Rational& constant,
                              int terms = 8) {
  GradedPoly p = GradedPoly::constant(gens, D, constant);
  std::uniform_int_distribution<int> exponent(0, D);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(gens->size());
    for (auto& x : e) x = exponent(rng) / 2;
    int degree = 0;
    for (std::size_t i = 0; i < e.size(); ++i) degree += e[i] * (*gens)[i].degree;
    if (degree == 0) continue;
    p.add_term(e, random_rational(rng));
  }
  return p;
}

// Random virtual character over e1..eD with nonzero rational rank.
inline BundleCharacter random_character(int D, std::mt19937_64& rng) {
  Rational rank = 0;
  while (rank == 0) rank = random_rational(rng);
  return BundleCharacter::from_total(random_poly(ch_symbols(D), D, rng, rank, 10));
}

}  // namespace logchern::testing

// Readable failure output when included after doctest.h.
#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {

template <>
struct StringMaker<logchern::GradedPoly> {
  static String convert(const logchern::GradedPoly& p) { return p.to_string().c_str(); }
};

template <>
struct StringMaker<logchern::BundleCharacter> {
  static String convert(const logchern::BundleCharacter& a) {
    std::string out = "(" + logchern::to_string(a.rank());
    for (const auto& c : a.components()) out += ", " + c.to_string();
    return (out + ")").c_str();
  }
};

}  // namespace doctest
#endif
