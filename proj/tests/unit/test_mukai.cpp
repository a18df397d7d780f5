#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logchern/combinatorics.hpp"
#include "logchern/errors.hpp"
#include "logchern/mukai.hpp"
#include "logchern/oracle.hpp"

using namespace logchern;

namespace {

// Independent route: v = ch * sqrt(td) with td = (1, 0, 2), so v = (ch_0, ch_1, ch_2 + ch_0).
// For E with v(E) = (r, cH, s): e1 = cH, e2 = s - r, and H^2 = 2d.
MukaiVector via_oracle(const MukaiVector& v, const Partition& alpha) {
  const int r = static_cast<int>(v.r.get_si());
  const auto ch = oracle_schur_ch(alpha, r, 2);
  const Rational c1 = ch.ch(1).coefficient({1, 0});
  const Rational e1sq = ch.ch(2).coefficient({2, 0});
  const Rational e2 = ch.ch(2).coefficient({0, 1});
  const Rational c(v.c);
  const Rational ch2 = e1sq * c * c * Rational(2 * v.d) + e2 * (v.s - Rational(v.r));
  const Rational cc = c1 * c;
  CHECK(is_integer(cc));
  return MukaiVector{to_integer(ch.rank()), to_integer(cc), ch2 + ch.rank(), v.d};
}

}  // namespace

TEST_CASE("second symmetric power of a rank-2 vector") {
  for (int d = 1; d <= 12; ++d) {
    const MukaiVector v{2, 1, 2, d};
    const auto w = mukai_schur(v, Partition({2}));
    CHECK(w == MukaiVector{3, 3, Rational(d + 3), d});
    CHECK(is_primitive(w) == (d % 3 != 0));
    CHECK(to_string(w) == "(3, 3*H, " + std::to_string(d + 3) + ")");
  }
}

TEST_CASE("identity and determinant") {
  const MukaiVector v{2, 1, 2, 5};
  CHECK(mukai_schur(v, Partition({1})) == v);
  CHECK(mukai_schur(v, Partition({1, 1})) == MukaiVector{1, 1, 6, 5});
}

TEST_CASE("agrees with the oracle") {
  const std::vector<MukaiVector> inputs{{2, 1, 2, 1}, {2, 1, 2, 4}, {2, 3, -1, 2}, {3, 2, 5, 1}, {3, 0, 1, 3},
                                        {4, 1, 3, 2}};
  for (const auto& v : inputs) {
    const int r = static_cast<int>(v.r.get_si());
    for (int size = 1; size <= 4; ++size) {
      for (const auto& alpha : enumerate_partitions(size, r)) {
        CHECK(mukai_schur(v, alpha) == via_oracle(v, alpha));
      }
    }
  }
}

TEST_CASE("rank one") {
  // A line bundle L with c1 = cH has s = 1 + c^2 d.
  const MukaiVector line{1, 2, 9, 2};
  CHECK(mukai_schur(line, Partition({3})) == MukaiVector{1, 6, 1 + 36 * 2, 2});
  CHECK_THROWS_AS(mukai_schur(MukaiVector{1, 2, 3, 2}, Partition({2})), DomainError);
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(MukaiVector{1, 0, 1, 1}));
  CHECK(!is_primitive(MukaiVector{2, 2, 4, 1}));
  CHECK(is_primitive(MukaiVector{2, 2, 3, 1}));
  CHECK_THROWS_AS(is_primitive(MukaiVector{2, 1, make_rational(1, 2), 1}), UsageError);
}
