#include <algorithm>

#include "doctest.h"
#include "qmult/parabolic.hpp"

using namespace qmult;

TEST_CASE("levi validation") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK(make_parabolic(a2, {}).is_borel());
  CHECK_THROWS_AS(make_parabolic(a2, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_parabolic(a2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_parabolic(a2, {3}), std::invalid_argument);

  const RootSystem a3 = build_root_system(Series::A, 3);
  CHECK(make_parabolic(a3, {3, 1, 3}).levi_indices == std::vector<int>{1, 3});
}

TEST_CASE("nilradical roots") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK(nilradical_roots(a2, make_parabolic(a2, {})).size() == 3);

  const auto xi = nilradical_roots(a2, make_parabolic(a2, {1}));
  REQUIRE(xi.size() == 2);
  CHECK(xi[0] == RootVector{{0, 1}});
  CHECK(xi[1] == RootVector{{1, 1}});

  const RootSystem b2 = build_root_system(Series::B, 2);
  const auto xib = nilradical_roots(b2, make_parabolic(b2, {1}));
  REQUIRE(xib.size() == 3);
  CHECK(xib[0] == RootVector{{0, 1}});
  CHECK(xib[1] == RootVector{{1, 1}});
  CHECK(xib[2] == RootVector{{1, 2}});
}

TEST_CASE("nilradical plus levi positives partition the positive roots") {
  for (const char* name : {"A3", "B3", "C3", "D4", "G2"}) {
    const RootSystem rs = build_root_system(parse_type(name));
    for (int i = 1; i <= rs.rank; ++i) {
      const auto p = make_parabolic(rs, {i});
      std::size_t levi_count = 0;
      for (const RootVector& r : rs.positive_roots) {
        bool supported = true;
        for (int j = 0; j < rs.rank; ++j)
          if (r.coords[j] != 0 && j + 1 != i) supported = false;
        if (supported) ++levi_count;
      }
      CHECK(nilradical_roots(rs, p).size() + levi_count == rs.positive_roots.size());
    }
  }
}

TEST_CASE("P-dominance constrains only the levi indices") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const auto p1 = make_parabolic(a2, {1});
  CHECK(is_p_dominant(a2, p1, Weight{{0, 0}}));
  CHECK(is_p_dominant(a2, p1, Weight{{0, -5}}));
  CHECK_FALSE(is_p_dominant(a2, p1, Weight{{-1, 3}}));
  CHECK(is_p_dominant(a2, make_parabolic(a2, {}), Weight{{-7, -7}}));
}

TEST_CASE("doubled half sum of nilradical roots") {
  const RootSystem a1 = build_root_system(Series::A, 1);
  CHECK(two_rho_p(a1, make_parabolic(a1, {})) == Weight{{2}});

  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK(two_rho_p(a2, make_parabolic(a2, {})) == Weight{{2, 2}});
  CHECK(two_rho_p(a2, make_parabolic(a2, {1})) == Weight{{0, 3}});

  // 2 rho_P = 2 rho - (sum of levi-supported positive roots).
  for (const char* name : {"B3", "C3", "D4"}) {
    const RootSystem rs = build_root_system(parse_type(name));
    for (int i = 1; i <= rs.rank; ++i) {
      const auto p = make_parabolic(rs, {i});
      std::vector<i64> levi_sum(rs.rank, 0);
      for (const RootVector& r : rs.positive_roots) {
        bool supported = true;
        for (int j = 0; j < rs.rank; ++j)
          if (r.coords[j] != 0 && j + 1 != i) supported = false;
        if (supported)
          for (int j = 0; j < rs.rank; ++j) levi_sum[j] += r.coords[j];
      }
      const Weight expected =
          rho(rs) + rho(rs) - root_to_weight(rs, RootVector(levi_sum));
      CHECK(two_rho_p(rs, p) == expected);
    }
  }
}

TEST_CASE("abelian nilradical test") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK(is_hermitian_symmetric(a2, make_parabolic(a2, {1})));

  const RootSystem b2 = build_root_system(Series::B, 2);
  CHECK_FALSE(is_hermitian_symmetric(b2, make_parabolic(b2, {1})));
  CHECK(is_hermitian_symmetric(b2, make_parabolic(b2, {2})));
}

TEST_CASE("abelian nilradical matches the cominuscule criterion") {
  for (const char* name :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"}) {
    const RootSystem rs = build_root_system(parse_type(name));
    for (int i = 1; i <= rs.rank; ++i) {
      std::vector<int> levi;
      for (int j = 1; j <= rs.rank; ++j)
        if (j != i) levi.push_back(j);
      CHECK(is_hermitian_symmetric(rs, make_parabolic(rs, levi)) ==
            (rs.highest_root.coords[i - 1] == 1));
    }
  }
}

TEST_CASE("vanishing case classifier") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const auto borel = make_parabolic(a2, {});
  const auto p1 = make_parabolic(a2, {1});
  CHECK(vanishing_case(a2, borel, Weight{{1, 0}}) == VanishingCase::LineBundleDominant);
  CHECK(vanishing_case(a2, p1, Weight{{2, 1}}) == VanishingCase::MinimalParabolic);

  const RootSystem b2 = build_root_system(Series::B, 2);
  const auto q1 = make_parabolic(b2, {1});
  CHECK(vanishing_case(b2, q1, Weight{{0, -1}}) == VanishingCase::Unknown);
  // mu + 2 rho_P = (0,-2) + (0,4) = (0,2): dominant but singular on the wall.
  CHECK(vanishing_case(b2, q1, Weight{{0, -2}}) == VanishingCase::Unknown);
  // mu = (1,-2): mu + 2 rho_P = (1,2) is dominant and P-regular.
  CHECK(vanishing_case(b2, q1, Weight{{1, -2}}) == VanishingCase::TwistedRegular);
  // Dominant weights on a minimal parabolic classify earlier.
  CHECK(vanishing_case(b2, q1, Weight{{0, 1}}) == VanishingCase::MinimalParabolic);

  // Hermitian symmetric tag needs |Pi| >= 2 to be reachable.
  const RootSystem b3 = build_root_system(Series::B, 3);
  const auto hs = make_parabolic(b3, {2, 3});
  REQUIRE(is_hermitian_symmetric(b3, hs));
  CHECK(vanishing_case(b3, hs, Weight{{0, 0, 0}}) == VanishingCase::HermitianSymmetric);

  // Regular dominant mu makes mu + 2 rho_P P-regular, so the twisted tag
  // already covers the type-A regular case.
  const RootSystem a3 = build_root_system(Series::A, 3);
  const auto a3p = make_parabolic(a3, {1, 3});
  CHECK(vanishing_case(a3, a3p, Weight{{1, 1, 1}}) == VanishingCase::TwistedRegular);

  CHECK_THROWS_AS(vanishing_case(a2, p1, Weight{{-1, 0}}), std::invalid_argument);
}

TEST_CASE("borel with dominant weight is never Unknown") {
  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(parse_type(name));
    const auto borel = make_parabolic(rs, {});
    for (i64 a = 0; a <= 2; ++a)
      for (i64 b = 0; b <= 2; ++b)
        CHECK(vanishing_case(rs, borel, Weight{{a, b}}) != VanishingCase::Unknown);
  }
}
