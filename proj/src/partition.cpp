#include "qmult/partition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace qmult {

namespace {

bool all_zero(const std::vector<i64>& v) {
  return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

}  // namespace

std::size_t PartitionFn::KeyHash::operator()(const Key& k) const {
  std::size_t h = 1469598103934665603ull ^ k.index;
  for (i64 c : k.coords) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

PartitionFn::PartitionFn(const RootSystem& rs, std::vector<RootVector> xi_plus)
    : rs_(&rs), roots_(std::move(xi_plus)) {
  if (roots_.empty()) throw std::invalid_argument("empty root set for partition function");
  std::set<std::vector<i64>> positives;
  for (const RootVector& r : rs.positive_roots) positives.insert(r.coords);
  for (const RootVector& r : roots_)
    if (!positives.contains(r.coords))
      throw std::invalid_argument("partition root " + str(r) + " is not a positive root of " +
                                  type_name(rs.series, rs.rank));

  suffix_support_.assign(roots_.size() + 1, std::vector<char>(rs.rank, 0));
  for (std::size_t i = roots_.size(); i-- > 0;) {
    suffix_support_[i] = suffix_support_[i + 1];
    for (int c = 0; c < rs.rank; ++c)
      if (roots_[i].coords[c] > 0) suffix_support_[i][c] = 1;
  }
}

QPolynomial PartitionFn::operator()(const Weight& nu) const {
  auto rc = nonneg_integral_root_coords(*rs_, nu);
  if (!rc) return {};
  return eval_root_coords(*rc);
}

PartitionResult PartitionFn::eval(const Weight& nu, std::optional<int> max_degree) const {
  const QPolynomial full = (*this)(nu);
  if (!max_degree) return {full, false};
  return {full.truncated(*max_degree), full.has_term_above(*max_degree)};
}

QPolynomial PartitionFn::eval_root_coords(const std::vector<i64>& nu) const {
  if (static_cast<int>(nu.size()) != rs_->rank)
    throw std::invalid_argument("root coordinate rank mismatch");
  for (i64 c : nu)
    if (c < 0) return {};
  return compute(0, nu);
}

// P(nu; roots from index i) = sum_{k>=0} q^k P(nu - k*alpha_i; roots from i+1).
// Counting problem: every coefficient along the way is nonnegative.
QPolynomial PartitionFn::compute(std::size_t index, const std::vector<i64>& nu) const {
  if (all_zero(nu)) return QPolynomial::one();
  // A coordinate no remaining root can serve makes the count zero.
  for (int c = 0; c < rs_->rank; ++c)
    if (nu[c] > 0 && !suffix_support_[index][c]) return {};
  if (index == roots_.size()) return {};

  const Key key{index, nu};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  QPolynomial result;
  const std::vector<i64>& alpha = roots_[index].coords;
  std::vector<i64> rest = nu;
  int k = 0;
  for (;;) {
    result.add_shifted(compute(index + 1, rest), k);
    bool feasible = true;
    for (int c = 0; c < rs_->rank; ++c) {
      rest[c] -= alpha[c];
      if (rest[c] < 0) feasible = false;
    }
    if (!feasible) break;
    ++k;
  }

  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(key, std::move(result)).first->second;
}

std::size_t PartitionFn::memo_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

void PartitionFn::save_cache(std::ostream& os) const {
  nlohmann::json roots = nlohmann::json::array();
  for (const RootVector& r : roots_) roots.push_back(r.coords);
  nlohmann::json entries = nlohmann::json::array();
  {
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [key, poly] : memo_) {
      entries.push_back({{"coeffs", poly.coeffs()}, {"index", key.index}, {"nu", key.coords}});
    }
  }
  os << nlohmann::json{{"entries", entries}, {"roots", roots}} << "\n";
}

void PartitionFn::load_cache(std::istream& is) {
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception&) {
    return;  // unreadable cache: start empty
  }
  if (!doc.is_object() || !doc.contains("roots") || !doc.contains("entries")) return;
  nlohmann::json roots = nlohmann::json::array();
  for (const RootVector& r : roots_) roots.push_back(r.coords);
  if (doc["roots"] != roots) return;  // recorded for a different root set
  std::lock_guard<std::mutex> lock(mutex_);
  for (const auto& entry : doc["entries"]) {
    if (!entry.contains("index") || !entry.contains("nu") || !entry.contains("coeffs")) continue;
    Key key{entry["index"].get<std::size_t>(), entry["nu"].get<std::vector<i64>>()};
    if (key.index > roots_.size() || static_cast<int>(key.coords.size()) != rs_->rank) continue;
    memo_.emplace(std::move(key), QPolynomial(entry["coeffs"].get<std::vector<i64>>()));
  }
}

PartitionResult partition_q(const RootSystem& rs, const std::vector<RootVector>& xi_plus,
                            const Weight& nu, std::optional<int> max_degree) {
  return PartitionFn(rs, xi_plus).eval(nu, max_degree);
}

std::map<Weight, i64> weights_of_degree(const RootSystem& rs,
                                        const std::vector<RootVector>& xi_plus, int m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  std::map<Weight, i64> out;
  std::vector<i64> acc(rs.rank, 0);
  // Multisets as nondecreasing index sequences.
  auto rec = [&](auto&& self, std::size_t index, int remaining) -> void {
    if (remaining == 0) {
      Weight w = root_to_weight(rs, RootVector(acc));
      auto [it, fresh] = out.emplace(std::move(w), 1);
      if (!fresh) it->second = checked_add(it->second, 1);
      return;
    }
    if (index == xi_plus.size()) return;
    // k copies of root `index`, then recurse on the rest.
    for (int k = 0; k <= remaining; ++k) {
      if (k > 0)
        for (int c = 0; c < rs.rank; ++c)
          acc[c] = checked_add(acc[c], xi_plus[index].coords[c]);
      self(self, index + 1, remaining - k);
    }
    for (int c = 0; c < rs.rank; ++c)
      acc[c] = checked_sub(acc[c], checked_mul(remaining, xi_plus[index].coords[c]));
  };
  rec(rec, 0, m);
  return out;
}

}  // namespace qmult
