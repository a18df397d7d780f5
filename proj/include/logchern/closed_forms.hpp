#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logchern/bundle.hpp"
#include "logchern/partition.hpp"
#include "logchern/rational.hpp"

namespace logchern {

// Casimir polynomials in partition form. The span overloads accept any vector
// of length r (entries need not form a partition); the Partition overloads pad
// alpha with zeros to length r.
Rational delta2_dot(std::span<const Rational> alpha);
Rational delta3_dot(std::span<const Rational> alpha);
Rational delta2_dot(const Partition& alpha, int r);
Rational delta3_dot(const Partition& alpha, int r);

// The same polynomials in the shifted variables x_i = alpha_i - i + 1:
//   delta^(2)(x) = (r-1) sum x_i^2 - 2 sum_{i<j} x_i x_j - r^2(r^2-1)/12
//   delta^(3)(x) = 2(r-2)(r-1) sum x_i^3 - 6(r-2) sum_{i!=j} x_i^2 x_j + 24 sum_{i<j<k} x_i x_j x_k
Rational delta2_shifted(std::span<const Rational> x);
Rational delta3_shifted(std::span<const Rational> x);

struct SchurCoefficients {
  Partition alpha;
  int r = 1;
  Integer r_alpha;
  // Absent where the normalising denominator vanishes: delta2_tilde needs
  // r >= 2, delta3_tilde needs r >= 3.
  std::optional<Rational> delta2_tilde;
  std::optional<Rational> delta3_tilde;
  Rational f1;
  std::optional<Rational> f2;
  std::optional<Rational> f3;
};

SchurCoefficients schur_coefficients(const Partition& alpha, int r);

// Predicted ratio Delta_k(S^alpha E) / Delta_k(E) for k = 1, 2, 3:
// |alpha| r_alpha/r, delta2_tilde (r_alpha/r)^2, delta3_tilde (r_alpha/r)^3.
// Absent when the corresponding delta_tilde is.
std::optional<Rational> fibrati_factor(const SchurCoefficients& coeffs, int k);

// ch(S^m E) through degree D from Svrtan's double sum over partitions.
BundleCharacter svrtan_sym_ch(int m, int r, int D);

// Closed ch_0..ch_{max_degree} of the exterior and Schur bundles. ch_2 needs
// r >= 2 and ch_3 needs r >= 3; asking for more throws DomainError.
BundleCharacter ext_power_ch3(int n, int r, int max_degree = 3);
BundleCharacter schur_ch3(const Partition& alpha, int r, int max_degree = 3);

// Highest degree the closed formulas reach for (alpha, r). Rows (and the empty
// partition) go through Svrtan and have no cap; std::nullopt means unbounded.
std::optional<int> closed_degree_cap(const Partition& alpha, int r);
// Dispatches to svrtan_sym_ch for rows, schur_ch3 otherwise.
BundleCharacter closed_schur_ch(const Partition& alpha, int r, int D);

// The printed degree-4 coefficient for symmetric powers:
// m(m+r)(m^2+rm+r(r+1)) / ((r+1)(r+2)(r+3)).
Rational f4_sym(int m, int r);

// The exterior-bundle Delta_2 / Delta_3 factors exactly as printed in the
// explicit-formula appendix (a single r_n/r factor), kept for the discrepancy report.
Rational printed_exterior_delta_factor(int k, int n, int r);

struct HcShiftReport {
  int k = 2;
  int r = 2;
  bool symbolic_ok = false;
  std::uint64_t points_checked = 0;
  std::uint64_t translations_checked = 0;
  bool passed = false;
  std::optional<std::string> witness;
};

struct HcShiftOptions {
  int grid_radius = 3;
  // Rank from which the grid is sampled instead of enumerated in full.
  int sample_from_rank = 5;
  int samples = 2000;
  std::uint64_t seed = 20240917;
};

// Checks the Harish-Chandra shift identity delta^(k)(x) = delta_dot^(k)(alpha)
// with alpha_i = x_i + i - 1, and translation invariance of delta^(k), both
// symbolically and on integer grid points.
HcShiftReport hc_shift_check(int k, int r, const HcShiftOptions& options = {});

}  // namespace logchern
