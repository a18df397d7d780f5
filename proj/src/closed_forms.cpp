#include "logchern/closed_forms.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "logchern/combinatorics.hpp"
#include "logchern/errors.hpp"

namespace logchern {

namespace {

// The Casimir polynomials are written once, generically over the value type, so
// the same code evaluates them at rationals and expands them symbolically.
template <class T, class Lift>
T delta2_dot_generic(std::span<const T> a, Lift lift) {
  const long r = static_cast<long>(a.size());
  T acc = lift(Rational(0));
  for (long i = 1; i <= r; ++i) {
    const T& ai = a[static_cast<std::size_t>(i - 1)];
    acc += lift(Rational(r - 1)) * ai * ai;
    acc += lift(Rational(r * (r + 1 - 2 * i))) * ai;
    for (long j = i + 1; j <= r; ++j) acc -= lift(Rational(2)) * ai * a[static_cast<std::size_t>(j - 1)];
  }
  return acc;
}

template <class T, class Lift>
T delta3_dot_generic(std::span<const T> a, Lift lift) {
  const long r = static_cast<long>(a.size());
  auto at = [&](long i) -> const T& { return a[static_cast<std::size_t>(i - 1)]; };
  T acc = lift(Rational(0));
  for (long i = 1; i <= r; ++i) {
    acc += lift(Rational(2 * (r - 2) * (r - 1))) * at(i) * at(i) * at(i);
    acc += lift(Rational(3 * r * (r - 2) * (r + 1 - 2 * i))) * at(i) * at(i);
    acc += lift(Rational(r * r * (6 * i * i - 6 * i * (r + 1) + r * r + 3 * r + 2))) * at(i);
    for (long j = 1; j <= r; ++j) {
      if (j != i) acc -= lift(Rational(6 * (r - 2))) * at(i) * at(i) * at(j);
      if (j <= i) continue;
      acc -= lift(Rational(12 * r * (r + 1 - i - j))) * at(i) * at(j);
      for (long k = j + 1; k <= r; ++k) acc += lift(Rational(24)) * at(i) * at(j) * at(k);
    }
  }
  return acc;
}

template <class T, class Lift>
T delta2_shifted_generic(std::span<const T> x, Lift lift) {
  const long r = static_cast<long>(x.size());
  T acc = lift(-make_rational(r * r * (r * r - 1), 12));
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += lift(Rational(r - 1)) * x[i] * x[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) acc -= lift(Rational(2)) * x[i] * x[j];
  }
  return acc;
}

template <class T, class Lift>
T delta3_shifted_generic(std::span<const T> x, Lift lift) {
  const long r = static_cast<long>(x.size());
  T acc = lift(Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += lift(Rational(2 * (r - 2) * (r - 1))) * x[i] * x[i] * x[i];
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j != i) acc -= lift(Rational(6 * (r - 2))) * x[i] * x[i] * x[j];
      if (j <= i) continue;
      for (std::size_t k = j + 1; k < x.size(); ++k) acc += lift(Rational(24)) * x[i] * x[j] * x[k];
    }
  }
  return acc;
}

Rational identity_lift(const Rational& q) { return q; }

std::vector<Rational> padded_values(const Partition& alpha, int r) {
  std::vector<Rational> out;
  for (int part : alpha.padded(r)) out.emplace_back(part);
  return out;
}

void require_rank(int r, const char* op) {
  if (r < 1) throw UsageError(std::string(op) + ": rank must be positive");
}

}  // namespace

Rational delta2_dot(std::span<const Rational> alpha) { return delta2_dot_generic(alpha, identity_lift); }
Rational delta3_dot(std::span<const Rational> alpha) { return delta3_dot_generic(alpha, identity_lift); }

Rational delta2_dot(const Partition& alpha, int r) {
  require_rank(r, "delta2_dot");
  return delta2_dot(std::span<const Rational>(padded_values(alpha, r)));
}

Rational delta3_dot(const Partition& alpha, int r) {
  require_rank(r, "delta3_dot");
  return delta3_dot(std::span<const Rational>(padded_values(alpha, r)));
}

Rational delta2_shifted(std::span<const Rational> x) { return delta2_shifted_generic(x, identity_lift); }
Rational delta3_shifted(std::span<const Rational> x) { return delta3_shifted_generic(x, identity_lift); }

SchurCoefficients schur_coefficients(const Partition& alpha, int r) {
  require_rank(r, "schur_coefficients");
  SchurCoefficients out;
  out.alpha = alpha.with_context_rank(r);
  out.r = r;
  out.r_alpha = weyl_dim(alpha, r);
  const Rational ratio = make_rational(out.r_alpha, r);
  out.f1 = Rational(alpha.size()) * ratio;
  if (r >= 2) {
    out.delta2_tilde = delta2_dot(alpha, r) / Rational((r - 1) * (r + 1));
    out.f2 = *out.delta2_tilde * ratio;
  }
  if (r >= 3) {
    out.delta3_tilde = delta3_dot(alpha, r) / Rational((r - 2) * (r - 1) * (r + 1) * (r + 2));
    out.f3 = *out.delta3_tilde * ratio;
  }
  return out;
}

std::optional<Rational> fibrati_factor(const SchurCoefficients& coeffs, int k) {
  const Rational ratio = make_rational(coeffs.r_alpha, coeffs.r);
  switch (k) {
    case 1:
      return Rational(coeffs.alpha.size()) * ratio;
    case 2:
      if (!coeffs.delta2_tilde) return std::nullopt;
      return *coeffs.delta2_tilde * ratio * ratio;
    case 3:
      if (!coeffs.delta3_tilde) return std::nullopt;
      return *coeffs.delta3_tilde * ratio * ratio * ratio;
    default:
      throw UsageError("fibrati_factor: k must be 1, 2 or 3");
  }
}

BundleCharacter svrtan_sym_ch(int m, int r, int D) {
  if (m < 0) throw UsageError("svrtan_sym_ch: m must be non-negative");
  require_rank(r, "svrtan_sym_ch");
  if (D < 1) throw UsageError("svrtan_sym_ch: D must be at least 1");
  const auto gens = ch_symbols(D);
  GradedPoly total = GradedPoly::constant(gens, D, Rational(binomial(m + r - 1, m)));

  for (int size = 1; size <= D; ++size) {
    for (const Partition& alpha : enumerate_partitions(size, size)) {
      const auto parts = alpha.parts();
      // ||alpha|| = product of factorials of the part multiplicities
      Integer norm = 1;
      for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        norm *= factorial(static_cast<unsigned>(j - i));
        i = j;
      }
      Rational inner = 0;
      std::vector<int> beta(parts.size(), 1);
      while (true) {
        int beta_size = 0;
        Integer weight = 1;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          beta_size += beta[i];
          weight *= factorial(static_cast<unsigned>(beta[i] - 1)) * stirling2(parts[i], beta[i]);
        }
        inner += Rational(binomial(m + r - 1, m - beta_size) * weight);
        // next beta with 1 <= beta_i <= alpha_i, odometer style
        std::size_t pos = 0;
        while (pos < parts.size() && beta[pos] == parts[pos]) beta[pos++] = 1;
        if (pos == parts.size()) break;
        ++beta[pos];
      }
      if (inner == 0) continue;
      std::vector<int> exponents(static_cast<std::size_t>(D), 0);
      for (int part : parts) ++exponents[static_cast<std::size_t>(part - 1)];
      total.add_term(exponents, inner / Rational(norm));
    }
  }
  return BundleCharacter::from_total(total);
}

namespace {

void require_degree(int max_degree, int r, const char* op) {
  if (max_degree < 1 || max_degree > 3) throw UsageError(std::string(op) + ": max_degree must lie in 1..3");
  if (max_degree >= 2 && r < 2) throw DomainError(std::string(op) + ": ch_2 needs rank at least 2");
  if (max_degree >= 3 && r < 3) throw DomainError(std::string(op) + ": ch_3 needs rank at least 3 (factor r-2)");
}

// Assembles rank, ch_1 = a c1, ch_2 = b20 c1^2 + b2 ch2, ch_3 = b30 c1^3 + b31 c1 ch2 + b3 ch3.
struct LowDegreeLines {
  Rational rank, a, b20, b2, b30, b31, b3;
};

BundleCharacter assemble(const LowDegreeLines& l, int max_degree) {
  const auto gens = ch_symbols(max_degree);
  auto e = [&](int k) { return GradedPoly::generator(gens, max_degree, static_cast<std::size_t>(k - 1)); };
  std::vector<GradedPoly> comps;
  comps.push_back(l.a * e(1));
  if (max_degree >= 2) comps.push_back(l.b20 * e(1) * e(1) + l.b2 * e(2));
  if (max_degree >= 3) comps.push_back(l.b30 * e(1).pow(3) + l.b31 * e(1) * e(2) + l.b3 * e(3));
  return BundleCharacter(l.rank, std::move(comps));
}

}  // namespace

BundleCharacter ext_power_ch3(int n, int r, int max_degree) {
  require_rank(r, "ext_power_ch3");
  if (n < 0 || n > r) throw UsageError("ext_power_ch3: n must lie in 0..r");
  require_degree(max_degree, r, "ext_power_ch3");
  const Rational rn(binomial(r, n));
  const Rational q = rn / Rational(r);
  LowDegreeLines l;
  l.rank = rn;
  l.a = Rational(n) * q;
  if (max_degree >= 2) {
    l.b20 = make_rational((n - 1) * n, 2 * (r - 1)) * q;
    l.b2 = make_rational(n * (r - n), r - 1) * q;
  }
  if (max_degree >= 3) {
    const long den = static_cast<long>(r - 2) * (r - 1);
    l.b30 = make_rational(static_cast<long>(n - 2) * (n - 1) * n, 6 * den) * q;
    l.b31 = make_rational(static_cast<long>(n - 1) * n * (r - n), den) * q;
    l.b3 = make_rational(static_cast<long>(n) * (2 * n * n - 3 * r * n + r * r), den) * q;
  }
  return assemble(l, max_degree);
}

BundleCharacter schur_ch3(const Partition& alpha, int r, int max_degree) {
  require_degree(max_degree, r, "schur_ch3");
  const SchurCoefficients sc = schur_coefficients(alpha, r);
  const Rational q = make_rational(sc.r_alpha, r);
  const Rational size(alpha.size());
  const Rational rr(r);
  LowDegreeLines l;
  l.rank = Rational(sc.r_alpha);
  l.a = size * q;
  if (max_degree >= 2) {
    const Rational& d2 = *sc.delta2_tilde;
    l.b20 = (size * size - d2) / (2 * rr) * q;
    l.b2 = d2 * q;
    if (max_degree >= 3) {
      const Rational& d3 = *sc.delta3_tilde;
      l.b30 = (size * size * size - 3 * size * d2 + 2 * d3) / (6 * rr * rr) * q;
      l.b31 = (size * d2 - d3) / rr * q;
      l.b3 = d3 * q;
    }
  }
  return assemble(l, max_degree);
}

std::optional<int> closed_degree_cap(const Partition& alpha, int r) {
  require_rank(r, "closed_degree_cap");
  if (alpha.is_empty() || alpha.is_row()) return std::nullopt;
  return std::min(r, 3);
}

BundleCharacter closed_schur_ch(const Partition& alpha, int r, int D) {
  if (alpha.length() > r) {
    throw UsageError("partition " + alpha.to_string() + " has more than " + std::to_string(r) + " parts");
  }
  if (alpha.is_empty() || alpha.is_row()) return svrtan_sym_ch(alpha[0], r, D);
  const int cap = *closed_degree_cap(alpha, r);
  if (D > cap) {
    throw DomainError("closed formulas for non-row partitions stop at degree " + std::to_string(cap) +
                      " in rank " + std::to_string(r) + "; requested " + std::to_string(D));
  }
  return schur_ch3(alpha, r, D);
}

Rational f4_sym(int m, int r) {
  if (m < 0 || r < 1) throw UsageError("f4_sym: needs m >= 0 and r >= 1");
  const long M = m, R = r;
  return make_rational(M * (M + R) * (M * M + R * M + R * (R + 1)), (R + 1) * (R + 2) * (R + 3));
}

Rational printed_exterior_delta_factor(int k, int n, int r) {
  if (n < 0 || n > r) throw UsageError("printed_exterior_delta_factor: n must lie in 0..r");
  const Rational q = Rational(binomial(r, n)) / Rational(r);
  if (k == 2) {
    if (r < 2) throw DomainError("printed_exterior_delta_factor: k = 2 needs r >= 2");
    return make_rational(n * (r - n), r - 1) * q;
  }
  if (k == 3) {
    if (r < 3) throw DomainError("printed_exterior_delta_factor: k = 3 needs r >= 3");
    return make_rational(static_cast<long>(n) * (2 * n * n - 3 * n * r + r * r), static_cast<long>(r - 2) * (r - 1)) *
           q;
  }
  throw UsageError("printed_exterior_delta_factor: k must be 2 or 3");
}

namespace {

std::string format_point(std::span<const Rational> x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << to_string(x[i]);
  out << ')';
  return out.str();
}

bool symbolic_hc_check(int k, int r) {
  std::vector<Generator> list;
  for (int i = 1; i <= r; ++i) list.push_back({"x" + std::to_string(i), 1});
  list.push_back({"t", 1});
  const auto gens = std::make_shared<const GeneratorSet>(std::move(list));
  const int D = 3;
  auto lift = [&](const Rational& q) { return GradedPoly::constant(gens, D, q); };
  std::vector<GradedPoly> x, alpha, moved;
  const GradedPoly t = GradedPoly::generator(gens, D, static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    x.push_back(GradedPoly::generator(gens, D, static_cast<std::size_t>(i)));
    // reading x_i as alpha_i, the shifted variable is alpha_i - i + 1 (0-based: - i)
    alpha.push_back(x.back() - lift(Rational(i)));
    moved.push_back(x.back() - t);
  }
  auto shifted = [&](std::span<const GradedPoly> v) {
    return k == 2 ? delta2_shifted_generic(v, lift) : delta3_shifted_generic(v, lift);
  };
  const GradedPoly dot = k == 2 ? delta2_dot_generic(std::span<const GradedPoly>(x), lift)
                                : delta3_dot_generic(std::span<const GradedPoly>(x), lift);
  return shifted(alpha) == dot && shifted(moved) == shifted(x);
}

}  // namespace

HcShiftReport hc_shift_check(int k, int r, const HcShiftOptions& options) {
  if (k != 2 && k != 3) throw UsageError("hc_shift_check: k must be 2 or 3");
  if (r < 2) throw UsageError("hc_shift_check: r must be at least 2");
  if (options.grid_radius < 0 || options.samples < 0) throw UsageError("hc_shift_check: bad grid options");

  HcShiftReport report;
  report.k = k;
  report.r = r;
  report.symbolic_ok = symbolic_hc_check(k, r);
  if (!report.symbolic_ok) report.witness = "symbolic identity fails";

  auto shifted = [k](std::span<const Rational> v) { return k == 2 ? delta2_shifted(v) : delta3_shifted(v); };
  auto dot = [k](std::span<const Rational> v) { return k == 2 ? delta2_dot(v) : delta3_dot(v); };

  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(100 * k + r));
  const int radius = options.grid_radius;
  std::uniform_int_distribution<int> coordinate(-radius, radius);
  std::uniform_int_distribution<long> numerator(-12, 12);
  std::uniform_int_distribution<long> denominator(1, 7);

  auto check_point = [&](const std::vector<Rational>& x) {
    std::vector<Rational> alpha(x);
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] += Rational(static_cast<long>(i));
    ++report.points_checked;
    if (shifted(x) != dot(alpha)) {
      if (!report.witness) report.witness = "shift fails at x = " + format_point(x);
      return;
    }
    const Rational a = make_rational(numerator(rng), denominator(rng));
    std::vector<Rational> moved(x);
    for (auto& v : moved) v -= a;
    ++report.translations_checked;
    if (shifted(moved) != shifted(x) && !report.witness) {
      report.witness = "translation by " + to_string(a) + " fails at x = " + format_point(x);
    }
  };

  std::vector<Rational> x(static_cast<std::size_t>(r));
  if (r >= options.sample_from_rank) {
    for (int s = 0; s < options.samples; ++s) {
      for (auto& v : x) v = coordinate(rng);
      check_point(x);
    }
  } else {
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == x.size()) {
        check_point(x);
        return;
      }
      for (int v = -radius; v <= radius; ++v) {
        x[i] = v;
        walk(i + 1);
      }
    };
    walk(0);
  }
  report.passed = !report.witness.has_value();
  return report;
}

}  // namespace logchern
