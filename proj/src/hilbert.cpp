#include "qmult/hilbert.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qmult {

namespace {

void require_p_dominant(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                        const char* who) {
  if (!is_p_dominant(rs, p, mu))
    throw std::invalid_argument(std::string(who) + " requires a P-dominant weight, got " +
                                str(mu));
  if (static_cast<int>(mu.coords.size()) != rs.rank)
    throw std::invalid_argument("weight rank mismatch");
}

// tau = mu + (m-fold sums of nilradical roots) for all m <= max_degree, with
// multiset counts. Shared support of both computation routes.
std::vector<std::map<Weight, i64>> degree_supports(const RootSystem& rs,
                                                   const std::vector<RootVector>& xi,
                                                   int max_degree) {
  std::vector<std::map<Weight, i64>> out;
  out.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int m = 0; m <= max_degree; ++m) out.push_back(weights_of_degree(rs, xi, m));
  return out;
}

std::uint64_t fnv_mix(std::uint64_t h, i64 v) {
  h ^= static_cast<std::uint64_t>(v);
  return h * 1099511628211ull;
}

}  // namespace

GradedCharacter graded_euler_lusztig(const RootSystem& rs, const ParabolicSubset& p,
                                     const Weight& mu, int max_degree, i64 weyl_cap) {
  const auto weyl = enumerate_weyl(rs, weyl_cap);
  const PartitionFn partition(rs, nilradical_roots(rs, p));
  return graded_euler_lusztig(rs, p, weyl, partition, mu, max_degree);
}

GradedCharacter graded_euler_lusztig(const RootSystem& rs, const ParabolicSubset& p,
                                     const std::vector<WeylElement>& weyl,
                                     const PartitionFn& partition, const Weight& mu,
                                     int max_degree) {
  require_p_dominant(rs, p, mu, "graded_euler_lusztig");
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");

  // Candidates: regular dominant-chamber images of the tau support. A dominant
  // weight missing here has zero coefficient in every degree <= max_degree.
  std::set<Weight> candidates;
  const Weight r = rho(rs);
  for (const auto& level : degree_supports(rs, partition.roots(), max_degree))
    for (const auto& [sigma, count] : level) {
      const ChamberResult chamber = to_dominant_chamber(rs, mu + sigma + r);
      if (chamber.regular) candidates.insert(chamber.dominant_rep - r);
    }

  GradedCharacter gc;
  gc.max_degree = max_degree;
  for (const Weight& lambda : candidates) {
    QPolynomial poly = lusztig_poly(rs, weyl, partition, lambda, mu).truncated(max_degree);
    if (!poly.is_zero()) gc.terms.emplace(lambda, std::move(poly));
  }
  return gc;
}

GradedCharacter graded_euler_direct(const RootSystem& rs, const ParabolicSubset& p,
                                    const Weight& mu, int max_degree) {
  require_p_dominant(rs, p, mu, "graded_euler_direct");
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");

  const auto xi = nilradical_roots(rs, p);
  GradedCharacter gc;
  gc.max_degree = max_degree;
  const auto supports = degree_supports(rs, xi, max_degree);
  for (int m = 0; m <= max_degree; ++m) {
    for (const auto& [sigma, count] : supports[static_cast<std::size_t>(m)]) {
      const SignedWeight chi = bwb_euler(rs, mu + sigma);
      if (chi.is_zero()) continue;
      gc.terms[*chi.highest_weight].add_term(m, checked_mul(chi.sign, count));
    }
  }
  std::erase_if(gc.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return gc;
}

HilbertReport hilbert_series(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                             int max_degree, PathCheck check, i64 weyl_cap) {
  const auto weyl = enumerate_weyl(rs, weyl_cap);
  const PartitionFn partition(rs, nilradical_roots(rs, p));
  return hilbert_series(rs, p, weyl, partition, mu, max_degree, check);
}

HilbertReport hilbert_series(const RootSystem& rs, const ParabolicSubset& p,
                             const std::vector<WeylElement>& weyl, const PartitionFn& partition,
                             const Weight& mu, int max_degree, PathCheck check) {
  require_p_dominant(rs, p, mu, "hilbert_series");

  HilbertReport report;
  report.series = graded_euler_lusztig(rs, p, weyl, partition, mu, max_degree);

  bool check_now = check == PathCheck::Always;
  if (check == PathCheck::Sampled) {
    std::uint64_t h = fnv_mix(14695981039346656037ull, static_cast<i64>(rs.series));
    h = fnv_mix(h, rs.rank);
    for (int i : p.levi_indices) h = fnv_mix(h, i);
    for (i64 c : mu.coords) h = fnv_mix(h, c);
    h = fnv_mix(h, max_degree);
    check_now = (h % 4) == 0;
  }
  if (check_now) {
    const GradedCharacter direct = graded_euler_direct(rs, p, mu, max_degree);
    if (!(direct == report.series)) {
      std::ostringstream os;
      os << "graded Euler character routes disagree for " << type_name(rs.series, rs.rank)
         << " mu=" << str(mu) << " max_degree=" << max_degree;
      throw IdentityViolationError(os.str());
    }
  }

  report.vanishing = vanishing_case(rs, p, mu);
  report.covered = report.vanishing != VanishingCase::Unknown;
  report.dims = dimension_series(rs, report.series);
  return report;
}

std::vector<i64> dimension_series(const RootSystem& rs, const GradedCharacter& gc) {
  std::vector<i64> dims(static_cast<std::size_t>(gc.max_degree) + 1, 0);
  for (const auto& [lambda, poly] : gc.terms) {
    const i64 dim = weyl_dimension(rs, dual_highest_weight(rs, lambda));
    for (int m = 0; m <= gc.max_degree; ++m)
      dims[static_cast<std::size_t>(m)] =
          checked_add(dims[static_cast<std::size_t>(m)], checked_mul(poly.coeff(m), dim));
  }
  return dims;
}

}  // namespace qmult
