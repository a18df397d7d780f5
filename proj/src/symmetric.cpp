#include "logchern/symmetric.hpp"

#include <functional>
#include <map>
#include <utility>

#include "logchern/errors.hpp"

namespace logchern {

namespace {

void require_values(std::span<const GradedPoly> values, int r, const char* op) {
  if (r < 1) throw UsageError(std::string(op) + ": rank must be positive");
  if (values.size() != static_cast<std::size_t>(r)) {
    throw UsageError(std::string(op) + ": expected " + std::to_string(r) + " values, got " +
                     std::to_string(values.size()));
  }
  for (const auto& v : values) {
    if (!same_generators(v.generators(), values.front().generators()) ||
        v.truncation() != values.front().truncation()) {
      throw UsageError(std::string(op) + ": values live in different rings");
    }
  }
}

GradedPoly one_like(const GradedPoly& p) { return GradedPoly::constant(p.generators(), p.truncation(), 1); }

// p_1..p_k of the values; index 0 holds p_0 = r.
std::vector<GradedPoly> power_sums(std::span<const GradedPoly> values, int k) {
  std::vector<GradedPoly> powers(values.begin(), values.end());
  std::vector<GradedPoly> sums;
  sums.push_back(one_like(values.front()) * Rational(static_cast<long>(values.size())));
  for (int i = 1; i <= k; ++i) {
    GradedPoly s(values.front().generators(), values.front().truncation());
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (i > 1) powers[j] *= values[j];
      s += powers[j];
    }
    sums.push_back(std::move(s));
  }
  return sums;
}

// h_0..h_k (complete == true) or sigma_0..sigma_k from power sums by Newton's identities.
std::vector<GradedPoly> newton_sequence(const std::vector<GradedPoly>& p, int k, bool complete) {
  std::vector<GradedPoly> out;
  out.push_back(one_like(p.front()));
  for (int n = 1; n <= k; ++n) {
    GradedPoly acc(p.front().generators(), p.front().truncation());
    for (int i = 1; i <= n; ++i) {
      GradedPoly term = p[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(n - i)];
      if (!complete && i % 2 == 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    out.push_back(acc / Rational(n));
  }
  return out;
}

}  // namespace

GradedPoly family_in_roots(SymmetricKind kind, int index, int r, std::span<const GradedPoly> values) {
  require_values(values, r, "family_in_roots");
  if (index < 0) throw UsageError("family_in_roots: negative index");
  switch (kind) {
    case SymmetricKind::power_sum:
      return power_sums(values, index)[static_cast<std::size_t>(index)];
    case SymmetricKind::complete:
      return newton_sequence(power_sums(values, index), index, true)[static_cast<std::size_t>(index)];
    case SymmetricKind::elementary:
      return newton_sequence(power_sums(values, index), index, false)[static_cast<std::size_t>(index)];
    case SymmetricKind::schur:
      break;
  }
  throw UsageError("family_in_roots: Schur polynomials are indexed by a partition");
}

GradedPoly schur_in_roots(const Partition& alpha, int r, std::span<const GradedPoly> values) {
  require_values(values, r, "schur_in_roots");
  if (alpha.length() > r) {
    throw UsageError("schur_in_roots: partition " + alpha.to_string() + " has more than " + std::to_string(r) +
                     " parts");
  }
  const GradedPoly one = one_like(values.front());
  const int len = alpha.length();
  if (len == 0) return one;

  const int max_index = alpha[0] + len - 1;
  const auto h = newton_sequence(power_sums(values, max_index), max_index, true);
  const GradedPoly zero(one.generators(), one.truncation());
  auto entry = [&](int i, int j) -> const GradedPoly& {
    const int idx = alpha[static_cast<std::size_t>(i)] - i + j;
    return idx < 0 ? zero : h[static_cast<std::size_t>(idx)];
  };

  // Laplace expansion along rows, memoized on the set of unused columns.
  std::map<unsigned, GradedPoly> memo;
  std::function<GradedPoly(unsigned)> minor = [&](unsigned columns) -> GradedPoly {
    const int row = len - __builtin_popcount(columns);
    if (row == len) return one;
    if (auto it = memo.find(columns); it != memo.end()) return it->second;
    GradedPoly acc = zero;
    int position = 0;
    for (int col = 0; col < len; ++col) {
      if (!(columns & (1U << col))) continue;
      const GradedPoly& a = entry(row, col);
      if (!a.is_zero()) {
        GradedPoly term = a * minor(columns & ~(1U << col));
        if (position % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    memo.emplace(columns, acc);
    return acc;
  };
  return minor((1U << len) - 1U);
}

GradedPoly evaluate(const SymmetricPolyFamily& family, std::span<const GradedPoly> values) {
  if (family.kind == SymmetricKind::schur) {
    const auto* alpha = std::get_if<Partition>(&family.index);
    if (!alpha) throw UsageError("Schur family needs a partition index");
    return schur_in_roots(*alpha, family.rank, values);
  }
  const auto* k = std::get_if<int>(&family.index);
  if (!k) throw UsageError("sigma/h/p families need an integer index");
  return family_in_roots(family.kind, *k, family.rank, values);
}

std::vector<GradedPoly> root_generators(int r, int D) {
  const auto gens = chern_roots(r);
  std::vector<GradedPoly> out;
  for (int i = 0; i < r; ++i) out.push_back(GradedPoly::generator(gens, D, static_cast<std::size_t>(i)));
  return out;
}

std::vector<GradedPoly> exp_roots(int r, int D) {
  auto roots = root_generators(r, D);
  for (auto& a : roots) a = poly_exp(a);
  return roots;
}

bool is_symmetric(const GradedPoly& p) {
  const auto& gens = *p.generators();
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    if (gens[i].degree != gens[i + 1].degree) return false;
    for (const auto& [m, c] : p.terms()) {
      if (m.exponents[i] == m.exponents[i + 1]) continue;
      auto swapped = m.exponents;
      std::swap(swapped[i], swapped[i + 1]);
      if (p.coefficient(swapped) != c) return false;
    }
  }
  return true;
}

namespace {

void require_root_ring(const GradedPoly& p, int r, const char* op) {
  const auto& gens = *p.generators();
  if (gens.size() != static_cast<std::size_t>(r)) {
    throw UsageError(std::string(op) + ": expected a polynomial in " + std::to_string(r) + " Chern roots");
  }
  for (const auto& g : gens) {
    if (g.degree != 1) throw UsageError(std::string(op) + ": Chern roots must have degree 1");
  }
}

}  // namespace

GradedPoly sym_to_power_sums(const GradedPoly& p, int r) {
  require_root_ring(p, r, "sym_to_power_sums");
  if (!is_symmetric(p)) throw UsageError("sym_to_power_sums: input is not symmetric: " + p.to_string());
  const int D = p.truncation();
  const auto pi_gens = power_sum_symbols(D);
  const int top = std::min(r, D);

  std::vector<GradedPoly> roots;
  for (int i = 0; i < r; ++i) roots.push_back(GradedPoly::generator(p.generators(), D, static_cast<std::size_t>(i)));
  const auto sigma_roots = newton_sequence(power_sums(roots, top), top, false);

  std::vector<GradedPoly> pi;
  pi.push_back(GradedPoly::constant(pi_gens, D, r));
  for (int k = 1; k <= top; ++k) pi.push_back(GradedPoly::generator(pi_gens, D, static_cast<std::size_t>(k - 1)));
  const auto sigma_pi = newton_sequence(pi, top, false);

  // Cached powers sigma_j^e in both rings.
  std::map<std::pair<int, int>, std::pair<GradedPoly, GradedPoly>> power_cache;
  auto sigma_power = [&](int j, int e) -> const std::pair<GradedPoly, GradedPoly>& {
    auto key = std::make_pair(j, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) {
      it = power_cache
               .emplace(key, std::make_pair(sigma_roots[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(e)),
                                            sigma_pi[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(e))))
               .first;
    }
    return it->second;
  };

  GradedPoly rest = p;
  GradedPoly result(pi_gens, D);
  while (!rest.is_zero()) {
    // Lowest degree first; within a degree the lex-leading monomial a^lambda,
    // whose exponents are weakly decreasing because rest stays symmetric.
    const auto [mono, coeff] = *rest.terms().begin();
    const auto& lambda = mono.exponents;
    GradedPoly in_roots = GradedPoly::constant(p.generators(), D, coeff);
    GradedPoly in_pi = GradedPoly::constant(pi_gens, D, coeff);
    for (int j = 1; j <= r; ++j) {
      const int next = j < r ? lambda[static_cast<std::size_t>(j)] : 0;
      const int e = lambda[static_cast<std::size_t>(j - 1)] - next;
      if (e < 0) throw InternalError("sym_to_power_sums: leading exponents not decreasing");
      if (e == 0) continue;
      const auto& [root_pow, pi_pow] = sigma_power(j, e);
      in_roots *= root_pow;
      in_pi *= pi_pow;
    }
    rest -= in_roots;
    result += in_pi;
  }
  return result;
}

GradedPoly power_sums_to_roots(const GradedPoly& q, int r) {
  const int D = q.truncation();
  const auto& gens = *q.generators();
  const auto roots = root_generators(r, D);
  const auto sums = power_sums(roots, static_cast<int>(gens.size()));
  std::vector<GradedPoly> images;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].name != "p" + std::to_string(k + 1) || gens[k].degree != static_cast<int>(k + 1)) {
      throw UsageError("power_sums_to_roots: expected generators p1..pD");
    }
    images.push_back(sums[k + 1]);
  }
  if (images.empty()) return GradedPoly::constant(roots.front().generators(), D, q.constant_term());
  return q.substitute(images);
}

}  // namespace logchern
