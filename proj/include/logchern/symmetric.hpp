#pragma once

#include <span>
#include <variant>
#include <vector>

#include "logchern/graded_poly.hpp"
#include "logchern/partition.hpp"

namespace logchern {

enum class SymmetricKind { elementary, complete, power_sum, schur };

/// One member of a classical family of symmetric polynomials in r variables:
/// sigma_k, h_k, p_k (integer index) or s_alpha (partition index).
struct SymmetricPolyFamily {
  SymmetricKind kind;
  std::variant<int, Partition> index;
  int rank;
};

// Evaluates the family member at the given r values (all in one ring).
GradedPoly evaluate(const SymmetricPolyFamily& family, std::span<const GradedPoly> values);

// sigma_k, h_k or p_k at `values`. h and sigma come from the Newton recurrences
// k h_k = sum_i p_i h_{k-i} and k sigma_k = sum_i (-1)^{i-1} p_i sigma_{k-i}.
GradedPoly family_in_roots(SymmetricKind kind, int index, int r, std::span<const GradedPoly> values);

// s_alpha at `values`, via the Jacobi-Trudi determinant det(h_{alpha_i - i + j}).
GradedPoly schur_in_roots(const Partition& alpha, int r, std::span<const GradedPoly> values);

// The degree-1 generators a_1..a_r of the root ring, truncated at D.
std::vector<GradedPoly> root_generators(int r, int D);
// exp(a_1), ..., exp(a_r) in the root ring truncated at D.
std::vector<GradedPoly> exp_roots(int r, int D);

// Invariance under every adjacent transposition of the (degree-1) generators.
bool is_symmetric(const GradedPoly& p);

// Rewrites a symmetric polynomial in the r Chern roots as a polynomial in the
// power-sum generators p1..pD (p_k of degree k). The reduction goes through the
// elementary symmetric polynomials and Newton's identities, so only p1..pr
// occur; in degrees <= r this is the unique representation, above r it is a
// fixed section of the (no longer injective) map p_k -> sum a_i^k.
GradedPoly sym_to_power_sums(const GradedPoly& p, int r);

// Substitutes p_k -> sum_i a_i^k, the inverse direction of sym_to_power_sums.
GradedPoly power_sums_to_roots(const GradedPoly& q, int r);

}  // namespace logchern
