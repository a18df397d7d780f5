#include "logchern/graded_poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "logchern/errors.hpp"

namespace logchern {

GeneratorSet::GeneratorSet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.degree < 1) throw UsageError("generator '" + g.name + "' has degree < 1");
    if (g.name.empty()) throw UsageError("generator with empty name");
    if (!seen.insert(g.name).second) throw UsageError("duplicate generator name '" + g.name + "'");
  }
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

namespace {

GeneratorSetPtr make_set(const std::string& prefix, int count, bool weighted) {
  if (count < 0) throw UsageError("negative generator count");
  std::vector<Generator> gens;
  gens.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) gens.push_back({prefix + std::to_string(k), weighted ? k : 1});
  return std::make_shared<const GeneratorSet>(std::move(gens));
}

}  // namespace

GeneratorSetPtr chern_roots(int r) { return make_set("a", r, false); }
GeneratorSetPtr ch_symbols(int max_degree) { return make_set("e", max_degree, true); }
GeneratorSetPtr chern_class_symbols(int max_degree) { return make_set("c", max_degree, true); }
GeneratorSetPtr power_sum_symbols(int max_degree) { return make_set("p", max_degree, true); }

bool same_generators(const GeneratorSetPtr& a, const GeneratorSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

GradedPoly::GradedPoly(GeneratorSetPtr generators, int truncation)
    : generators_(std::move(generators)), truncation_(truncation) {
  if (!generators_) throw UsageError("GradedPoly needs a generator set");
  if (truncation_ < 0) throw UsageError("negative truncation degree");
}

GradedPoly GradedPoly::constant(GeneratorSetPtr generators, int truncation, const Rational& value) {
  GradedPoly p(std::move(generators), truncation);
  p.add_term(std::vector<int>(p.generators_->size(), 0), value);
  return p;
}

GradedPoly GradedPoly::generator(GeneratorSetPtr generators, int truncation, std::size_t index) {
  GradedPoly p(std::move(generators), truncation);
  if (index >= p.generators_->size()) throw UsageError("generator index out of range");
  std::vector<int> exps(p.generators_->size(), 0);
  exps[index] = 1;
  p.add_term(exps, 1);
  return p;
}

GradedPoly GradedPoly::generator(GeneratorSetPtr generators, int truncation, std::string_view name) {
  const auto index = generators->index_of(name);
  if (!index) throw UsageError("unknown generator '" + std::string(name) + "'");
  return generator(std::move(generators), truncation, *index);
}

int GradedPoly::weighted_degree(const std::vector<int>& exponents) const {
  int deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) deg += exponents[i] * (*generators_)[i].degree;
  return deg;
}

void GradedPoly::require_compatible(const GradedPoly& other, const char* op) const {
  if (!same_generators(generators_, other.generators_)) {
    throw UsageError(std::string(op) + ": mismatched generator sets");
  }
  if (truncation_ != other.truncation_) {
    throw UsageError(std::string(op) + ": mismatched truncation degrees");
  }
}

void GradedPoly::add_term(const std::vector<int>& exponents, const Rational& coeff) {
  if (exponents.size() != generators_->size()) throw UsageError("exponent vector has wrong length");
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
    throw UsageError("negative exponent");
  }
  if (coeff == 0) return;
  Monomial m{weighted_degree(exponents), exponents};
  if (m.degree > truncation_) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GradedPoly::constant_term() const {
  if (terms_.empty() || terms_.begin()->first.degree != 0) return 0;
  return terms_.begin()->second;
}

Rational GradedPoly::coefficient(const std::vector<int>& exponents) const {
  if (exponents.size() != generators_->size()) throw UsageError("exponent vector has wrong length");
  const auto it = terms_.find(Monomial{weighted_degree(exponents), exponents});
  return it == terms_.end() ? Rational(0) : it->second;
}

int GradedPoly::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }

bool GradedPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [degree](const auto& t) { return t.first.degree == degree; });
}

GradedPoly GradedPoly::homogeneous_part(int degree) const {
  GradedPoly out(generators_, truncation_);
  for (const auto& [m, c] : terms_) {
    if (m.degree == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

GradedPoly GradedPoly::with_truncation(int truncation) const {
  GradedPoly out(generators_, truncation);
  for (const auto& [m, c] : terms_) {
    if (m.degree <= truncation) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  require_compatible(other, "add");
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
  require_compatible(other, "subtract");
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.require_compatible(b, "multiply");
  GradedPoly out(a.generators_, a.truncation_);
  const std::size_t n = a.generators_->size();
  std::vector<int> exps(n);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // Terms are sorted by degree, so every later term of b is too large as well.
      if (ma.degree + mb.degree > a.truncation_) break;
      for (std::size_t i = 0; i < n; ++i) exps[i] = ma.exponents[i] + mb.exponents[i];
      Monomial m{ma.degree + mb.degree, exps};
      auto [it, inserted] = out.terms_.try_emplace(std::move(m), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& other) { return *this = *this * other; }

GradedPoly& GradedPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

GradedPoly& GradedPoly::operator/=(const Rational& scalar) {
  if (scalar == 0) throw DomainError("division of a polynomial by zero");
  for (auto& [m, c] : terms_) c /= scalar;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GradedPoly GradedPoly::pow(unsigned exponent) const {
  GradedPoly result = constant(generators_, truncation_, 1);
  GradedPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GradedPoly GradedPoly::substitute(std::span<const GradedPoly> images) const {
  if (images.size() != generators_->size()) throw UsageError("substitute: wrong number of images");
  if (images.empty()) throw UsageError("substitute: no images to define the target ring");
  const GradedPoly& ring = images.front();
  for (const auto& img : images) ring.require_compatible(img, "substitute");

  // powers[i][e] = images[i]^e, grown on demand
  std::vector<std::vector<GradedPoly>> powers(images.size());
  auto image_power = [&](std::size_t i, int e) -> const GradedPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(ring.generators_, ring.truncation_, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };

  GradedPoly out(ring.generators_, ring.truncation_);
  for (const auto& [m, c] : terms_) {
    GradedPoly term = constant(ring.generators_, ring.truncation_, c);
    for (std::size_t i = 0; i < m.exponents.size() && !term.is_zero(); ++i) {
      if (m.exponents[i] > 0) term *= image_power(i, m.exponents[i]);
    }
    out += term;
  }
  return out;
}

namespace {

std::string monomial_text(const GeneratorSet& gens, const std::vector<int>& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens[i].name;
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

}  // namespace

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(*generators_, m.exponents);
    if (mono.empty()) {
      out += logchern::to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += logchern::to_string(magnitude) + "*" + mono;
    }
  }
  return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return same_generators(a.generators_, b.generators_) && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const GeneratorSetPtr& gens, int truncation)
      : text_(text), gens_(gens), truncation_(truncation) {}

  GradedPoly run() {
    GradedPoly out(gens_, truncation_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(out, sign);
      skip_space();
    }
    return out;
  }

 private:
  void parse_term(GradedPoly& out, int sign) {
    Rational coeff = sign;
    std::vector<int> exps(gens_->size(), 0);
    bool have_factor = false;
    while (true) {
      skip_space();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        const std::string name = parse_identifier();
        const auto idx = gens_->index_of(name);
        if (!idx) fail("unknown generator '" + name + "'");
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          e = parse_small_int();
        }
        exps[*idx] += e;
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      have_factor = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    out.add_term(exps, coeff);
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::size_t end = pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("bad fraction");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      end = pos_;
    }
    return parse_rational(text_.substr(start, end - start));
  }

  int parse_small_int() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  std::string_view text_;
  const GeneratorSetPtr& gens_;
  int truncation_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly GradedPoly::parse(std::string_view text, GeneratorSetPtr generators, int truncation) {
  return PolyParser(text, generators, truncation).run();
}

GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b) { return a + b; }

GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

GradedPoly poly_exp(const GradedPoly& a) {
  if (a.constant_term() != 0) throw UsageError("poly_exp: argument has a nonzero constant term");
  const int D = a.truncation();
  GradedPoly sum = GradedPoly::constant(a.generators(), D, 1);
  GradedPoly term = sum;
  for (int k = 1; k <= D; ++k) {
    term = term * a / Rational(k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

GradedPoly poly_log(const GradedPoly& a) {
  if (a.constant_term() != 1) throw UsageError("poly_log: constant term must be 1");
  const int D = a.truncation();
  const GradedPoly x = a - GradedPoly::constant(a.generators(), D, 1);
  GradedPoly sum(a.generators(), D);
  GradedPoly xk = x;
  for (int k = 1; k <= D && !xk.is_zero(); ++k) {
    sum += (k % 2 == 1 ? xk : -xk) / Rational(k);
    xk = xk * x;
  }
  return sum;
}

std::optional<Rational> proportionality_factor(const GradedPoly& x, const GradedPoly& y) {
  if (!same_generators(x.generators(), y.generators()) || x.truncation() != y.truncation()) {
    throw UsageError("proportionality_factor: mismatched rings");
  }
  if (y.is_zero()) return x.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  if (x.terms().size() != y.terms().size() && !x.is_zero()) return std::nullopt;
  const Rational lambda = x.coefficient(y.terms().begin()->first.exponents) / y.terms().begin()->second;
  if (lambda == 0) return x.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  for (const auto& [m, c] : y.terms()) {
    if (x.coefficient(m.exponents) != lambda * c) return std::nullopt;
  }
  return lambda;
}

}  // namespace logchern
