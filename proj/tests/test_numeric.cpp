#include <limits>

#include "doctest.h"
#include "qmult/numeric.hpp"

using namespace qmult;

TEST_CASE("checked arithmetic fails loudly instead of wrapping") {
  const i64 big = std::numeric_limits<i64>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<i64>::min(), 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2, 3), OverflowError);
  CHECK_THROWS_AS(checked_neg(std::numeric_limits<i64>::min()), OverflowError);
}

TEST_CASE("rationals normalize and compute exactly") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(2, 3) * Rat(3, 4)) == Rat(1, 2));
  CHECK((Rat(1) / Rat(3)) == Rat(1, 3));
  CHECK(Rat(7, 1).is_integer());
  CHECK_FALSE(Rat(7, 2).is_integer());
  CHECK(Rat(-1, 2).is_negative());
  CHECK(Rat(0).is_zero());
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(5, 3).str() == "5/3");
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}
