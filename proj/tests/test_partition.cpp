#include <atomic>
#include <map>
#include <thread>

#include "doctest.h"
#include "qmult/parabolic.hpp"
#include "qmult/partition.hpp"

using namespace qmult;

namespace {

Weight fw(const RootSystem& rs, std::vector<i64> root_coords) {
  return root_to_weight(rs, RootVector(std::move(root_coords)));
}

// Test-side expansion of prod_{alpha in Xi} (1 - q x^alpha)^{-1} up to a
// height bound: map from root coordinates to the q-coefficient vector.
std::map<std::vector<i64>, std::vector<i64>> product_expansion(
    const RootSystem& rs, const std::vector<RootVector>& xi, i64 height_cap) {
  std::map<std::vector<i64>, std::vector<i64>> series;
  series[std::vector<i64>(rs.rank, 0)] = {1};
  for (const RootVector& alpha : xi) {
    std::map<std::vector<i64>, std::vector<i64>> next;
    for (const auto& [coords, qc] : series) {
      std::vector<i64> shifted = coords;
      for (i64 k = 0;; ++k) {
        i64 h = 0;
        for (i64 c : shifted) h += c;
        if (h > height_cap) break;
        auto& acc = next[shifted];
        if (acc.size() < qc.size() + k) acc.resize(qc.size() + k, 0);
        for (std::size_t m = 0; m < qc.size(); ++m) acc[m + k] += qc[m];
        for (int c = 0; c < rs.rank; ++c) shifted[c] += alpha.coords[c];
      }
    }
    series = std::move(next);
  }
  return series;
}

}  // namespace

TEST_CASE("base cases") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const auto all = a2.positive_roots;
  CHECK(partition_q(a2, all, Weight{{0, 0}}).poly == QPolynomial::one());

  const RootSystem a1 = build_root_system(Series::A, 1);
  for (i64 k = 0; k <= 4; ++k)
    CHECK(partition_q(a1, a1.positive_roots, fw(a1, {k})).poly ==
          QPolynomial::q_power(static_cast<int>(k)));
}

TEST_CASE("A2 highest root") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK(partition_q(a2, a2.positive_roots, Weight{{1, 1}}).poly == QPolynomial({0, 1, 1}));

  const auto xi = nilradical_roots(a2, make_parabolic(a2, {1}));
  CHECK(partition_q(a2, xi, Weight{{1, 1}}).poly == QPolynomial({0, 1}));
}

TEST_CASE("outside the cone the value is zero") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK(partition_q(a2, a2.positive_roots, Weight{{1, 0}}).poly.is_zero());   // fractional
  CHECK(partition_q(a2, a2.positive_roots, Weight{{-1, -1}}).poly.is_zero()); // negative
}

TEST_CASE("empty or foreign root sets are rejected") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  CHECK_THROWS_AS(partition_q(a2, {}, Weight{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(partition_q(a2, {RootVector{{2, 0}}}, Weight{{0, 0}}), std::invalid_argument);
}

TEST_CASE("truncation is explicit") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const Weight two_theta{{2, 2}};
  // P(2 theta) = q^2 + q^3 + q^4.
  const auto full = partition_q(a2, a2.positive_roots, two_theta);
  CHECK(full.poly == QPolynomial({0, 0, 1, 1, 1}));
  CHECK_FALSE(full.truncated);

  const auto cut = partition_q(a2, a2.positive_roots, two_theta, 2);
  CHECK(cut.poly == QPolynomial({0, 0, 1}));
  CHECK(cut.truncated);

  const auto uncut = partition_q(a2, a2.positive_roots, two_theta, 4);
  CHECK_FALSE(uncut.truncated);
}

TEST_CASE("degree-m weight tables") {
  const RootSystem a2 = build_root_system(Series::A, 2);
  const auto& all = a2.positive_roots;

  const auto m0 = weights_of_degree(a2, all, 0);
  REQUIRE(m0.size() == 1);
  CHECK(m0.at(Weight{{0, 0}}) == 1);

  const auto m1 = weights_of_degree(a2, all, 1);
  REQUIRE(m1.size() == 3);
  CHECK(m1.at(fw(a2, {1, 0})) == 1);
  CHECK(m1.at(fw(a2, {0, 1})) == 1);
  CHECK(m1.at(Weight{{1, 1}}) == 1);

  // All C(3+1,2) = 6 sums of two roots are distinct.
  const auto m2 = weights_of_degree(a2, all, 2);
  REQUIRE(m2.size() == 6);
  for (const auto& coords : {std::vector<i64>{2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2}})
    CHECK(m2.at(fw(a2, coords)) == 1);
}

TEST_CASE("tables agree with the partition coefficients") {
  for (const char* name : {"A2", "B2"}) {
    const RootSystem rs = build_root_system(parse_type(name));
    const auto& xi = rs.positive_roots;
    const PartitionFn partition(rs, xi);
    for (int m = 0; m <= 4; ++m)
      for (const auto& [w, count] : weights_of_degree(rs, xi, m))
        CHECK(partition(w).coeff(m) == count);
  }
}

TEST_CASE("matches the generating-function product on a small box") {
  for (const char* levi_case : {"borel", "p1"}) {
    const RootSystem b2 = build_root_system(Series::B, 2);
    const auto p = make_parabolic(
        b2, levi_case == std::string("borel") ? std::vector<int>{} : std::vector<int>{1});
    const auto xi = nilradical_roots(b2, p);
    const PartitionFn partition(b2, xi);
    for (const auto& [coords, qc] : product_expansion(b2, xi, 6)) {
      const QPolynomial expected{std::vector<i64>(qc)};
      CHECK(partition.eval_root_coords(coords) == expected);
    }
  }
}

TEST_CASE("concurrent evaluation matches serial results") {
  const RootSystem b2 = build_root_system(Series::B, 2);
  const PartitionFn serial(b2, b2.positive_roots);
  std::map<std::vector<i64>, QPolynomial> expected;
  for (i64 a = 0; a <= 6; ++a)
    for (i64 b = 0; b <= 6; ++b)
      expected[{a, b}] = serial.eval_root_coords({a, b});

  const PartitionFn shared(b2, b2.positive_roots);
  std::atomic<int> mismatches{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&] {
      for (const auto& [nu, poly] : expected)
        if (!(shared.eval_root_coords(nu) == poly)) ++mismatches;
    });
  for (auto& th : pool) th.join();
  CHECK(mismatches == 0);
}

TEST_CASE("degree bounds") {
  const RootSystem b2 = build_root_system(Series::B, 2);
  const PartitionFn partition(b2, b2.positive_roots);
  const i64 top = b2.highest_root.height();
  for (i64 a = 0; a <= 4; ++a)
    for (i64 b = 0; b <= 4; ++b) {
      const std::vector<i64> nu{a, b};
      const QPolynomial p = partition.eval_root_coords(nu);
      if (p.is_zero()) continue;
      const i64 height = a + b;
      // Full positive system: the all-simple-roots multiset gives degree
      // exactly height(nu); nothing can use fewer than height/height(theta).
      CHECK(p.degree() == height);
      int low = 0;
      while (p.coeff(low) == 0) ++low;
      CHECK(static_cast<i64>(low) * top >= height);
    }
}
