#pragma once

// Lusztig's q-analog of the weight multiplicity formula, in its parabolic
// form: the alternating Weyl sum of partition-function values
//   sum_w sgn(w) P_q(w(lambda+rho) - mu - rho)
// with the partition function taken over the nilradical roots of P.

#include "qmult/parabolic.hpp"
#include "qmult/partition.hpp"
#include "qmult/weyl.hpp"

namespace qmult {

// lambda must be dominant; mu is arbitrary. Weyl terms whose argument falls
// outside the nonnegative integral root cone are pruned before any partition
// evaluation.
QPolynomial lusztig_poly(const RootSystem& rs, const ParabolicSubset& p, const Weight& lambda,
                         const Weight& mu, i64 weyl_cap = kDefaultWeylCap);

// Reuse form for callers holding an enumerated Weyl group and a shared
// partition evaluator over nilradical_roots(rs, p).
QPolynomial lusztig_poly(const RootSystem& rs, const std::vector<WeylElement>& weyl,
                         const PartitionFn& partition, const Weight& lambda, const Weight& mu);

}  // namespace qmult
