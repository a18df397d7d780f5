#pragma once

#include <string>

#include "logchern/partition.hpp"
#include "logchern/rational.hpp"

namespace logchern {

/// Mukai vector (r, c H, s) of a sheaf on a K3 surface with Pic = Z H and
/// H^2 = 2d. For a bundle, s = ch_2 + r.
struct MukaiVector {
  Integer r;
  Integer c;
  Rational s;
  Integer d;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

// v(S^alpha E) from v(E): rank r_alpha, c-component |alpha| r_alpha/r c, and
//   s = (|alpha|^2 - dt)/r * r_alpha/r * c^2 d + dt (s - r) r_alpha/r + r_alpha
// with dt = delta2_tilde, and (cH)^2/2 = c^2 d. In rank 1 the bundle is a line
// bundle and dt plays no role (its coefficient s - r - c^2 d vanishes).
MukaiVector mukai_schur(const MukaiVector& v, const Partition& alpha);

// gcd(r, c, s) == 1; s must be an integer.
bool is_primitive(const MukaiVector& v);

// "(r, c*H, s)"
std::string to_string(const MukaiVector& v);

}  // namespace logchern
