#include "doctest.h"
#include "qmult/characters.hpp"
#include "qmult/lusztig.hpp"

using namespace qmult;

TEST_CASE("rank-1 values") {
  const RootSystem a1 = build_root_system(Series::A, 1);
  const auto borel = make_parabolic(a1, {});
  CHECK(lusztig_poly(a1, borel, Weight{{0}}, Weight{{0}}) == QPolynomial::one());
  CHECK(lusztig_poly(a1, borel, Weight{{2}}, Weight{{0}}) == QPolynomial({0, 1}));
  CHECK(lusztig_poly(a1, borel, Weight{{4}}, Weight{{0}}) == QPolynomial({0, 0, 1}));
}

TEST_CASE("A2 highest root recovers the exponents") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const auto borel = make_parabolic(a2, {});
  CHECK(lusztig_poly(a2, borel, Weight{{1, 1}}, Weight{{0, 0}}) == QPolynomial({0, 1, 1}));
  CHECK(lusztig_poly(a2, borel, Weight{{1, 1}}, Weight{{1, 1}}) == QPolynomial::one());
}

TEST_CASE("parabolic variant") {
  // Xi_+ = {alpha_2, alpha_1+alpha_2}: only the identity term survives and
  // contributes a single multiset.
  const RootSystem a2 = build_root_system(Series::A, 2);
  const auto p1 = make_parabolic(a2, {1});
  CHECK(lusztig_poly(a2, p1, Weight{{1, 2}}, Weight{{0, 1}}) == QPolynomial({0, 1}));
}

TEST_CASE("vanishing off the root cone and normalization at the top") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const auto borel = make_parabolic(a2, {});
  CHECK(lusztig_poly(a2, borel, Weight{{1, 0}}, Weight{{0, 1}}).is_zero());
  for (i64 a = 0; a <= 2; ++a)
    for (i64 b = 0; b <= 2; ++b)
      CHECK(lusztig_poly(a2, borel, Weight{{a, b}}, Weight{{a, b}}) == QPolynomial::one());
}

TEST_CASE("non-dominant highest weights are rejected") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK_THROWS_AS(lusztig_poly(a2, make_parabolic(a2, {}), Weight{{-1, 0}}, Weight{{0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("degree bound and positivity on a small dominant grid") {
  for (const char* name : {"A2", "B2"}) {
    const RootSystem rs = build_root_system(parse_type(name));
    const auto borel = make_parabolic(rs, {});
    const auto weyl = enumerate_weyl(rs);
    const PartitionFn partition(rs, nilradical_roots(rs, borel));
    for (i64 a = 0; a <= 2; ++a)
      for (i64 b = 0; b <= 2; ++b)
        for (i64 c = 0; c <= 2; ++c)
          for (i64 d = 0; d <= 2; ++d) {
            const Weight lambda{{a, b}};
            const Weight mu{{c, d}};
            const QPolynomial m = lusztig_poly(rs, weyl, partition, lambda, mu);
            CHECK(m.all_coeffs_nonnegative());
            if (!m.is_zero()) {
              const Rat h = weight_height(rs, lambda - mu);
              CHECK(Rat(m.degree()) == h);  // top term comes from the identity
              CHECK_FALSE(Rat(m.degree()) < Rat(0));
            }
          }
  }
}

TEST_CASE("q=1 specialization matches Freudenthal on the A2 adjoint") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const auto borel = make_parabolic(a2, {});
  const Weight theta{{1, 1}};
  const WeightCharacter ch = freudenthal(a2, theta);
  for (const auto& [mu, mult] : ch.mults) {
    bool dominant = true;
    for (i64 c : mu.coords) dominant &= c >= 0;
    if (!dominant) continue;
    CHECK(lusztig_poly(a2, borel, theta, mu).at_one() == mult);
  }
}
