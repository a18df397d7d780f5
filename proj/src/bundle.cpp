#include "logchern/bundle.hpp"

#include "logchern/errors.hpp"
#include "logchern/symmetric.hpp"

namespace logchern {

BundleCharacter::BundleCharacter(Rational rank, std::vector<GradedPoly> components)
    : rank_(std::move(rank)), components_(std::move(components)) {
  if (components_.empty()) throw UsageError("a bundle character needs at least ch_1 (D >= 1)");
  const int D = max_degree();
  for (int k = 1; k <= D; ++k) {
    const GradedPoly& c = components_[static_cast<std::size_t>(k - 1)];
    if (!same_generators(c.generators(), components_.front().generators()) || c.truncation() != D) {
      throw UsageError("bundle components must share one ring truncated at D = " + std::to_string(D));
    }
    if (!c.is_homogeneous(k)) {
      throw UsageError("ch_" + std::to_string(k) + " is not homogeneous of degree " + std::to_string(k) + ": " +
                       c.to_string());
    }
  }
}

BundleCharacter BundleCharacter::from_total(const GradedPoly& total) {
  std::vector<GradedPoly> comps;
  for (int k = 1; k <= total.truncation(); ++k) comps.push_back(total.homogeneous_part(k));
  return BundleCharacter(total.constant_term(), std::move(comps));
}

GradedPoly BundleCharacter::ch(int k) const {
  if (k == 0) return GradedPoly::constant(generators(), max_degree(), rank_);
  if (k < 0 || k > max_degree()) throw UsageError("ch_" + std::to_string(k) + " is outside 0..D");
  return components_[static_cast<std::size_t>(k - 1)];
}

GradedPoly BundleCharacter::total() const {
  GradedPoly t = ch(0);
  for (const auto& c : components_) t += c;
  return t;
}

BundleCharacter base_bundle(const Rational& rank, int D) {
  if (D < 1) throw UsageError("base_bundle: D must be at least 1");
  const auto gens = ch_symbols(D);
  std::vector<GradedPoly> comps;
  for (int k = 1; k <= D; ++k) comps.push_back(GradedPoly::generator(gens, D, static_cast<std::size_t>(k - 1)));
  return BundleCharacter(rank, std::move(comps));
}

BundleCharacter trivial_bundle(const Rational& rank, const GeneratorSetPtr& gens, int D) {
  return BundleCharacter::from_total(GradedPoly::constant(gens, D, rank));
}

BundleCharacter line_bundle(const GradedPoly& c1) {
  if (!c1.is_homogeneous(1)) throw UsageError("line_bundle: c1 must be homogeneous of degree 1");
  return BundleCharacter::from_total(poly_exp(c1));
}

BundleCharacter power_sum_character(int d, const Rational& rank, int D) {
  if (d < 1) throw UsageError("power_sum_character: d must be positive");
  const auto base = base_bundle(rank, D);
  std::vector<GradedPoly> comps;
  for (int k = 1; k <= D; ++k) comps.push_back(base.ch(k) * power(Rational(d), static_cast<unsigned>(k)));
  return BundleCharacter(rank, std::move(comps));
}

namespace {

void require_same_ring(const BundleCharacter& a, const BundleCharacter& b, const char* op) {
  if (a.max_degree() != b.max_degree() || !same_generators(a.generators(), b.generators())) {
    throw UsageError(std::string(op) + ": characters live in different rings");
  }
}

void require_nonzero_rank(const BundleCharacter& a, const char* op) {
  if (a.rank() == 0) throw DomainError(std::string(op) + ": rank (ch_0) is zero");
}

Rational integral_rank(const BundleCharacter& a, const char* op) {
  if (!is_integer(a.rank()) || a.rank() <= 0) {
    throw UsageError(std::string(op) + ": needs a positive integer rank, got " + to_string(a.rank()));
  }
  return a.rank();
}

}  // namespace

BundleCharacter direct_sum(const BundleCharacter& a, const BundleCharacter& b) {
  require_same_ring(a, b, "direct_sum");
  return BundleCharacter::from_total(a.total() + b.total());
}

BundleCharacter tensor(const BundleCharacter& a, const BundleCharacter& b) {
  require_same_ring(a, b, "tensor");
  return BundleCharacter::from_total(a.total() * b.total());
}

BundleCharacter scale(const BundleCharacter& a, const Rational& factor) {
  return BundleCharacter::from_total(a.total() * factor);
}

BundleCharacter truncate(const BundleCharacter& a, int D) {
  if (D < 1 || D > a.max_degree()) throw UsageError("truncate: D must lie in 1.." + std::to_string(a.max_degree()));
  std::vector<Generator> kept;
  for (const auto& g : *a.generators()) {
    if (g.degree <= D) kept.push_back(g);
  }
  const auto gens = std::make_shared<const GeneratorSet>(kept);
  std::vector<GradedPoly> images;
  std::size_t next = 0;
  for (const auto& g : *a.generators()) {
    images.push_back(g.degree <= D ? GradedPoly::generator(gens, D, next++) : GradedPoly(gens, D));
  }
  std::vector<GradedPoly> comps;
  for (int k = 1; k <= D; ++k) {
    comps.push_back(images.empty() ? GradedPoly(gens, D) : a.ch(k).substitute(images));
  }
  return BundleCharacter(a.rank(), std::move(comps));
}

GradedPoly log_character(const BundleCharacter& a) {
  require_nonzero_rank(a, "log_character");
  return poly_log(a.total() / a.rank());
}

DiscriminantVector discriminants(const BundleCharacter& a, int up_to) {
  require_nonzero_rank(a, "discriminants");
  if (up_to < 1 || up_to > a.max_degree()) {
    throw UsageError("discriminants: up_to must lie in 1.." + std::to_string(a.max_degree()));
  }
  const GradedPoly log = log_character(a);
  DiscriminantVector out;
  for (int k = 1; k <= up_to; ++k) {
    Rational factor = Rational(k) * power(a.rank(), static_cast<unsigned>(k));
    if (k % 2 == 0) factor = -factor;
    out.entries.push_back(log.homogeneous_part(k) * factor);
  }
  return out;
}

GradedPoly explicit_discriminant(const BundleCharacter& a, int k) {
  if (k < 1 || k > 5 || k > a.max_degree()) {
    throw UsageError("explicit_discriminant: k must lie in 1..min(5, D)");
  }
  const Rational& r = a.rank();
  auto c = [&](int i) { return i <= a.max_degree() ? a.ch(i) : GradedPoly(a.generators(), a.max_degree()); };
  const GradedPoly c1 = c(1), c2 = c(2), c3 = c(3), c4 = c(4), c5 = c(5);
  switch (k) {
    case 1:
      return c1;
    case 2:
      return c1 * c1 - Rational(2) * r * c2;
    case 3:
      return c1.pow(3) - Rational(3) * r * c1 * c2 + Rational(3) * r * r * c3;
    case 4:
      return c1.pow(4) - Rational(4) * r * c1 * c1 * c2 + Rational(2) * r * r * (c2 * c2 + Rational(2) * c1 * c3) -
             Rational(4) * power(r, 3) * c4;
    default:
      return c1.pow(5) - Rational(5) * r * c1.pow(3) * c2 + Rational(5) * r * r * c1 * (c2 * c2 + c1 * c3) -
             Rational(5) * power(r, 3) * (c2 * c3 + c1 * c4) + Rational(5) * power(r, 4) * c5;
  }
}

GradedPoly d_k(const BundleCharacter& a, int k) {
  require_nonzero_rank(a, "d_k");
  const auto deltas = discriminants(a, k);
  return deltas[k] / (Rational(k) * power(a.rank(), static_cast<unsigned>(k - 1)));
}

GradedPoly delta4t(const BundleCharacter& a, const Rational& t) {
  if (a.max_degree() < 4) throw UsageError("delta4t: needs D >= 4");
  const Rational& r = a.rank();
  const GradedPoly c1 = a.ch(1), c2 = a.ch(2), c3 = a.ch(3), c4 = a.ch(4);
  return t * c1.pow(4) - Rational(4) * t * r * c1 * c1 * c2 +
         Rational(2) * r * r * ((t + 1) * c2 * c2 + Rational(2) * (t - 1) * c1 * c3) -
         Rational(4) * (t - 1) * power(r, 3) * c4;
}

GradedPoly modified_delta(const BundleCharacter& a, int k) {
  const Rational r = integral_rank(a, "modified_delta");
  if (k != 4 && k != 5) throw UsageError("modified_delta: k must be 4 or 5");
  if (a.max_degree() < k) throw UsageError("modified_delta: needs D >= " + std::to_string(k));
  const auto deltas = discriminants(a, k);
  if (k == 4) return (r + 1) * deltas[4] - deltas[2] * deltas[2];
  return (r + 5) * deltas[5] - Rational(5) * deltas[2] * deltas[3];
}

ChernClassVector chern_classes(const BundleCharacter& a) {
  const int D = a.max_degree();
  std::vector<GradedPoly> p;  // p[k] = k! ch_k
  p.push_back(a.ch(0));
  for (int k = 1; k <= D; ++k) p.push_back(a.ch(k) * Rational(factorial(static_cast<unsigned>(k))));
  std::vector<GradedPoly> c;
  c.push_back(GradedPoly::constant(a.generators(), D, 1));
  for (int k = 1; k <= D; ++k) {
    GradedPoly acc(a.generators(), D);
    for (int i = 1; i <= k; ++i) {
      GradedPoly term = c[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
      if (i % 2 == 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    c.push_back(acc / Rational(k));
  }
  c.erase(c.begin());
  return ChernClassVector{std::move(c)};
}

BundleCharacter from_chern_classes(const Rational& rank, const ChernClassVector& classes) {
  if (!is_integer(rank) || rank <= 0) {
    throw UsageError("from_chern_classes: needs a positive integer rank, got " + to_string(rank));
  }
  if (classes.size() < 1) throw UsageError("from_chern_classes: no classes given");
  const long r = to_integer(rank).get_si();
  const int D = classes.size();
  const auto gens = classes[1].generators();
  for (int k = 1; k <= D; ++k) {
    if (k > r && !classes[k].is_zero()) {
      throw UsageError("from_chern_classes: c_" + std::to_string(k) + " must vanish above the rank");
    }
  }
  std::vector<GradedPoly> p(static_cast<std::size_t>(D) + 1, GradedPoly(gens, D));
  for (int k = 1; k <= D; ++k) {
    GradedPoly acc(gens, D);
    for (int i = 1; i < k; ++i) {
      GradedPoly term = classes[i] * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    GradedPoly last = classes[k] * Rational(k);
    if (k % 2 == 0) {
      acc -= last;
    } else {
      acc += last;
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  std::vector<GradedPoly> comps;
  for (int k = 1; k <= D; ++k) {
    comps.push_back(p[static_cast<std::size_t>(k)] / Rational(factorial(static_cast<unsigned>(k))));
  }
  return BundleCharacter(rank, std::move(comps));
}

BundleCharacter chern_class_bundle(int r, int D) {
  if (r < 1 || D < 1) throw UsageError("chern_class_bundle: r and D must be positive");
  const auto gens = chern_class_symbols(D);
  ChernClassVector classes;
  for (int k = 1; k <= D; ++k) {
    classes.classes.push_back(k <= r ? GradedPoly::generator(gens, D, static_cast<std::size_t>(k - 1))
                                     : GradedPoly(gens, D));
  }
  return from_chern_classes(r, classes);
}

BundleCharacter specialize_to_roots(const BundleCharacter& a, int r) {
  const int D = a.max_degree();
  const auto roots = root_generators(r, D);
  const auto& gens = *a.generators();
  std::vector<GradedPoly> images;
  for (const auto& g : gens) {
    const char kind = g.name.empty() ? '?' : g.name.front();
    const std::string index = g.name.substr(1);
    const bool numbered = !index.empty() && index.find_first_not_of("0123456789") == std::string::npos &&
                          std::stoi(index) == g.degree;
    if (!numbered || (kind != 'e' && kind != 'c')) {
      throw UsageError("specialize_to_roots: generator '" + g.name + "' is neither e_k nor c_k");
    }
    const SymmetricKind family = kind == 'e' ? SymmetricKind::power_sum : SymmetricKind::elementary;
    GradedPoly img = family_in_roots(family, g.degree, r, roots);
    if (kind == 'e') img /= Rational(factorial(static_cast<unsigned>(g.degree)));
    images.push_back(std::move(img));
  }
  std::vector<GradedPoly> comps;
  for (const auto& c : a.components()) {
    comps.push_back(images.empty() ? GradedPoly::constant(roots.front().generators(), D, c.constant_term())
                                   : c.substitute(images));
  }
  return BundleCharacter(a.rank(), std::move(comps));
}

bool equal_on_rank(const BundleCharacter& a, const BundleCharacter& b, int r) {
  if (a.max_degree() != b.max_degree()) return false;
  return specialize_to_roots(a, r) == specialize_to_roots(b, r);
}

GradedPoly class_in_roots(const GradedPoly& x, int r) {
  const int D = x.truncation();
  const int k = x.max_degree();
  if (k < 1) return GradedPoly::constant(chern_roots(r), D, x.constant_term());
  if (!x.is_homogeneous(k)) throw UsageError("class_in_roots: class is not homogeneous: " + x.to_string());
  std::vector<GradedPoly> slots(static_cast<std::size_t>(D), GradedPoly(x.generators(), D));
  slots[static_cast<std::size_t>(k - 1)] = x;
  return specialize_to_roots(BundleCharacter(0, slots), r).ch(k);
}

}  // namespace logchern
