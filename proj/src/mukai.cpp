#include "logchern/mukai.hpp"

#include "logchern/closed_forms.hpp"
#include "logchern/errors.hpp"

namespace logchern {

MukaiVector mukai_schur(const MukaiVector& v, const Partition& alpha) {
  if (v.r < 1) throw UsageError("mukai_schur: rank must be positive");
  if (v.d < 1) throw UsageError("mukai_schur: d must be positive (H^2 = 2d)");
  if (!v.r.fits_sint_p()) throw UsageError("mukai_schur: rank too large");
  const int r = static_cast<int>(v.r.get_si());
  const SchurCoefficients sc = schur_coefficients(alpha, r);
  const Rational q = make_rational(sc.r_alpha, v.r);
  const Rational size(alpha.size());
  const Rational half_c_squared = Rational(v.c * v.c * v.d);

  Rational dt = 0;
  if (sc.delta2_tilde) {
    dt = *sc.delta2_tilde;
  } else if (v.s - Rational(v.r) != half_c_squared) {
    throw DomainError("mukai_schur: a rank-1 vector must satisfy s - 1 = c^2 d");
  }

  const Rational c_out = size * q * Rational(v.c);
  if (!is_integer(c_out)) throw InternalError("mukai_schur: non-integral c-component " + to_string(c_out));
  MukaiVector out;
  out.r = sc.r_alpha;
  out.c = c_out.get_num();
  out.s = (size * size - dt) / Rational(v.r) * q * half_c_squared + dt * (v.s - Rational(v.r)) * q +
          Rational(sc.r_alpha);
  out.d = v.d;
  return out;
}

bool is_primitive(const MukaiVector& v) {
  if (!is_integer(v.s)) throw UsageError("is_primitive: s = " + to_string(v.s) + " is not an integer");
  Integer g;
  mpz_gcd(g.get_mpz_t(), v.r.get_mpz_t(), v.c.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.s.get_num_mpz_t());
  return g == 1;
}

std::string to_string(const MukaiVector& v) {
  return "(" + to_string(v.r) + ", " + to_string(v.c) + "*H, " + to_string(v.s) + ")";
}

}  // namespace logchern
