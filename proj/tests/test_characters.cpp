#include <random>

#include "doctest.h"
#include "qmult/characters.hpp"

using namespace qmult;

TEST_CASE("rank-1 string") {
  const RootSystem a1 = build_root_system(Series::A, 1);
  const WeightCharacter ch = freudenthal(a1, Weight{{3}});
  REQUIRE(ch.mults.size() == 4);
  for (i64 w : {-3, -1, 1, 3}) CHECK(ch.mult(Weight{{w}}) == 1);
  CHECK(ch.total() == 4);
}

TEST_CASE("A2 adjoint module") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const WeightCharacter ch = freudenthal(a2, Weight{{1, 1}});
  CHECK(ch.total() == 8);
  CHECK(ch.mult(Weight{{0, 0}}) == 2);
  CHECK(ch.mult(Weight{{1, 1}}) == 1);
  CHECK(ch.mult(Weight{{-1, -1}}) == 1);
}

TEST_CASE("G2 fundamental modules") {
  const RootSystem g2 = build_root_system(Series::G, 2);
  const WeightCharacter small = freudenthal(g2, Weight{{1, 0}});
  CHECK(small.total() == 7);
  CHECK(small.mult(Weight{{0, 0}}) == 1);

  const WeightCharacter adjoint = freudenthal(g2, Weight{{0, 1}});
  CHECK(adjoint.total() == 14);
  CHECK(adjoint.mult(Weight{{0, 0}}) == 2);
}

TEST_CASE("mass equals the dimension formula") {
  const std::vector<std::pair<const char*, std::vector<i64>>> cases = {
      {"A2", {1, 0}}, {"A2", {2, 1}}, {"B2", {0, 1}}, {"B2", {1, 1}},
      {"C3", {1, 0, 0}}, {"B3", {0, 0, 1}}, {"D4", {1, 0, 0, 0}}, {"G2", {1, 1}}};
  for (const auto& [name, coords] : cases) {
    const RootSystem rs = build_root_system(parse_type(name));
    const Weight lambda{coords};
    CHECK(freudenthal(rs, lambda).total() == weyl_dimension(rs, lambda));
  }
}

TEST_CASE("dimension formula spot values") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK(weyl_dimension(a2, Weight{{0, 0}}) == 1);
  CHECK(weyl_dimension(a2, Weight{{1, 0}}) == 3);
  CHECK(weyl_dimension(a2, Weight{{2, 2}}) == 27);
  const RootSystem b2 = build_root_system(Series::B, 2);
  CHECK(weyl_dimension(b2, Weight{{0, 1}}) == 4);  // spin module
  CHECK(weyl_dimension(b2, Weight{{1, 0}}) == 5);
  const RootSystem b3 = build_root_system(Series::B, 3);
  CHECK(weyl_dimension(b3, Weight{{0, 0, 1}}) == 8);
  const RootSystem d4 = build_root_system(Series::D, 4);
  CHECK(weyl_dimension(d4, Weight{{1, 0, 0, 0}}) == 8);
}

TEST_CASE("characters are Weyl invariant") {
  for (const char* name : {"A2", "B2"}) {
    const RootSystem rs = build_root_system(parse_type(name));
    const auto weyl = enumerate_weyl(rs);
    const WeightCharacter ch = freudenthal(rs, Weight{{1, 1}});
    for (const auto& [nu, mult] : ch.mults)
      for (const auto& w : weyl) CHECK(ch.mult(act(rs, w, nu)) == mult);
  }
}

TEST_CASE("duals") {
  const RootSystem a1 = build_root_system(Series::A, 1);
  CHECK(dual_highest_weight(a1, Weight{{5}}) == Weight{{5}});

  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK(dual_highest_weight(a2, Weight{{1, 0}}) == Weight{{0, 1}});
  CHECK(dual_highest_weight(a2, Weight{{2, 1}}) == Weight{{1, 2}});

  const RootSystem b2 = build_root_system(Series::B, 2);
  CHECK(dual_highest_weight(b2, Weight{{2, 1}}) == Weight{{2, 1}});

  const RootSystem a3 = build_root_system(Series::A, 3);
  CHECK(dual_highest_weight(a3, Weight{{1, 2, 0}}) == Weight{{0, 2, 1}});

  // Involution preserving dimension.
  for (i64 a = 0; a <= 2; ++a)
    for (i64 b = 0; b <= 2; ++b) {
      const Weight lambda{{a, b}};
      const Weight dual = dual_highest_weight(a2, lambda);
      CHECK(dual_highest_weight(a2, dual) == lambda);
      CHECK(weyl_dimension(a2, dual) == weyl_dimension(a2, lambda));
    }
}

TEST_CASE("euler characteristics of rank-1 line bundles") {
  const RootSystem a1 = build_root_system(Series::A, 1);
  for (i64 n = 0; n <= 5; ++n) {
    const SignedWeight sw = bwb_euler(a1, Weight{{n}});
    REQUIRE_FALSE(sw.is_zero());
    CHECK(sw.sign == 1);
    CHECK(*sw.highest_weight == Weight{{n}});
  }
  CHECK(bwb_euler(a1, Weight{{-1}}).is_zero());
  const SignedWeight sw = bwb_euler(a1, Weight{{-2}});
  REQUIRE_FALSE(sw.is_zero());
  CHECK(sw.sign == -1);
  CHECK(*sw.highest_weight == Weight{{0}});
}

TEST_CASE("euler characteristic is dot-action equivariant") {
  std::mt19937 rng(424242);
  for (const char* name : {"A2", "B2"}) {
    const RootSystem rs = build_root_system(parse_type(name));
    const auto weyl = enumerate_weyl(rs);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<i64> c(rs.rank);
      for (auto& x : c) x = static_cast<i64>(rng() % 9) - 4;
      const Weight tau{c};
      const SignedWeight base = bwb_euler(rs, tau);
      for (const auto& w : weyl) {
        const Weight dotted = act(rs, w, tau + rho(rs)) - rho(rs);
        const SignedWeight moved = bwb_euler(rs, dotted);
        if (base.is_zero()) {
          CHECK(moved.is_zero());
        } else {
          REQUIRE_FALSE(moved.is_zero());
          CHECK(moved.sign == sign(w) * base.sign);
          CHECK(*moved.highest_weight == *base.highest_weight);
        }
      }
    }
  }
}

TEST_CASE("dominant weights are their own euler data") {
  const RootSystem b2 = build_root_system(Series::B, 2);
  for (i64 a = 0; a <= 2; ++a)
    for (i64 b = 0; b <= 2; ++b) {
      const SignedWeight sw = bwb_euler(b2, Weight{{a, b}});
      REQUIRE_FALSE(sw.is_zero());
      CHECK(sw.sign == 1);
      CHECK(*sw.highest_weight == Weight{{a, b}});
    }
}
