#pragma once

// Self-verification suite: eight numbered criteria checked with exact
// arithmetic against independently coded oracles. Criteria 1, 2 and 5 run on
// a configurable grid; the remaining criteria are fixed anchors.

#include <iosfwd>
#include <string>
#include <vector>

#include "qmult/types.hpp"
#include "qmult/weyl.hpp"

namespace qmult {

struct VerifyOptions {
  std::vector<SimpleType> types;  // grid types for criteria 1, 2, 5
  int height_bound = 6;           // criterion 1: max height of lambda
  int max_degree = 3;             // criteria 2, 5: max truncation degree
  i64 weyl_cap = kDefaultWeylCap;

  static VerifyOptions defaults();
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a short summary of what ran
  double seconds = 0.0;
};

// Runs all criteria in order, streaming one "PASS criterion N ..." or
// "FAIL criterion N ..." line per criterion to `out`.
std::vector<CriterionResult> run_verification(const VerifyOptions& options, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace qmult
