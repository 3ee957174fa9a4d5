#pragma once

// The q-analog partition function for a fixed set of positive roots Xi_+:
// the coefficient of q^m in the value at nu counts the multisets of exactly m
// roots from Xi_+ summing to nu. Computed by a memoized recursion over the
// fixed root order; counts are multiset (unordered) counts.

#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qmult/qpolynomial.hpp"
#include "qmult/root_system.hpp"

namespace qmult {

struct PartitionResult {
  QPolynomial poly;
  bool truncated = false;  // true iff a nonzero coefficient above max_degree was dropped
};

// Memoized partition-function evaluator for one (root system, Xi_+) pair.
// Thread-safe: concurrent calls may duplicate work but never change results.
// The referenced RootSystem must outlive the evaluator.
class PartitionFn {
 public:
  PartitionFn(const RootSystem& rs, std::vector<RootVector> xi_plus);

  // Full polynomial; zero when nu has a negative or fractional root coordinate.
  QPolynomial operator()(const Weight& nu) const;
  PartitionResult eval(const Weight& nu, std::optional<int> max_degree) const;

  // Evaluation on nonnegative integral root coordinates directly.
  QPolynomial eval_root_coords(const std::vector<i64>& nu) const;

  const std::vector<RootVector>& roots() const { return roots_; }
  const RootSystem& root_system() const { return *rs_; }
  std::size_t memo_size() const;

  // Memo persistence. Loading silently ignores data recorded for a different
  // root set; saving writes a self-describing JSON document.
  void save_cache(std::ostream& os) const;
  void load_cache(std::istream& is);

 private:
  struct Key {
    std::size_t index;
    std::vector<i64> coords;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  QPolynomial compute(std::size_t index, const std::vector<i64>& nu) const;

  const RootSystem* rs_;
  std::vector<RootVector> roots_;
  // suffix_support_[i][c]: some root with index >= i has coordinate c > 0.
  std::vector<std::vector<char>> suffix_support_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Key, QPolynomial, KeyHash> memo_;
};

// One-shot form. xi_plus must be a nonempty subset of the positive roots.
PartitionResult partition_q(const RootSystem& rs, const std::vector<RootVector>& xi_plus,
                            const Weight& nu, std::optional<int> max_degree = std::nullopt);

// Every weight expressible as a sum of exactly m roots from xi_plus, with its
// number of distinct multisets.
std::map<Weight, i64> weights_of_degree(const RootSystem& rs,
                                        const std::vector<RootVector>& xi_plus, int m);

}  // namespace qmult
