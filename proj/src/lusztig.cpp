#include "qmult/lusztig.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmult {

QPolynomial lusztig_poly(const RootSystem& rs, const ParabolicSubset& p, const Weight& lambda,
                         const Weight& mu, i64 weyl_cap) {
  const auto weyl = enumerate_weyl(rs, weyl_cap);
  const PartitionFn partition(rs, nilradical_roots(rs, p));
  return lusztig_poly(rs, weyl, partition, lambda, mu);
}

QPolynomial lusztig_poly(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                         const PartitionFn& partition, const Weight& lambda, const Weight& mu) {
  if (!std::all_of(lambda.coords.begin(), lambda.coords.end(), [](i64 c) { return c >= 0; }))
    throw std::invalid_argument("lusztig_poly requires a dominant highest weight, got " +
                                str(lambda));
  if (lambda.coords.size() != mu.coords.size())
    throw std::invalid_argument("rank mismatch between lambda and mu");

  const Weight shifted = lambda + rho(rs);
  const Weight offset = mu + rho(rs);
  QPolynomial result;
  for (const WeylElement& w : weyl) {
    const Weight arg = act(rs, w, shifted) - offset;
    // Arguments outside the nonnegative integral root cone contribute nothing;
    // skip them before touching the partition recursion.
    const auto rc = nonneg_integral_root_coords(rs, arg);
    if (!rc) continue;
    const QPolynomial term = partition.eval_root_coords(*rc);
    if (sign(w) > 0)
      result += term;
    else
      result -= term;
  }
  return result;
}

}  // namespace qmult
