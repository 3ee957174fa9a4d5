#pragma once

// Graded Euler character of a homogeneous vector bundle over the symmetric
// powers of the tangent bundle, computed along two independent routes, and the
// resulting Hilbert series of nearly holomorphic sections when the vanishing
// condition is known to hold.

#include <map>
#include <vector>

#include "qmult/characters.hpp"
#include "qmult/lusztig.hpp"
#include "qmult/parabolic.hpp"

namespace qmult {

// sum_lambda terms[lambda](q) * ch V_lambda^*, truncated at degree max_degree.
// Keys are dominant; zero polynomials are absent.
struct GradedCharacter {
  std::map<Weight, QPolynomial> terms;
  int max_degree = 0;

  bool operator==(const GradedCharacter&) const = default;
};

// Route 1: coefficients are the parabolic Lusztig polynomials m_lambda^mu(P;q).
// Candidate lambdas are the regular dominant-chamber images of mu + (sums of
// at most max_degree nilradical roots); no other lambda can carry a nonzero
// coefficient in degrees <= max_degree.
GradedCharacter graded_euler_lusztig(const RootSystem& rs, const ParabolicSubset& p,
                                     const Weight& mu, int max_degree,
                                     i64 weyl_cap = kDefaultWeylCap);
GradedCharacter graded_euler_lusztig(const RootSystem& rs, const ParabolicSubset& p,
                                     const std::vector<WeylElement>& weyl,
                                     const PartitionFn& partition, const Weight& mu,
                                     int max_degree);

// Route 2: additivity of the Euler character. For each degree m, accumulate
// partition counts of mu + (m-fold nilradical sums) against line-bundle Euler
// characteristics on G/B.
GradedCharacter graded_euler_direct(const RootSystem& rs, const ParabolicSubset& p,
                                    const Weight& mu, int max_degree);

// The two routes agree identically; a mismatch is an internal convention bug
// and raises IdentityViolationError. Sampled mode cross-checks a deterministic
// quarter of the inputs.
enum class PathCheck { Always, Sampled };

struct HilbertReport {
  GradedCharacter series;
  VanishingCase vanishing = VanishingCase::Unknown;
  std::vector<i64> dims;  // dims[m] = dimension of the degree-m graded piece
  bool covered = false;   // vanishing != Unknown: the series is the actual
                          // Hilbert series, not just the Euler character
};

HilbertReport hilbert_series(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                             int max_degree, PathCheck check = PathCheck::Always,
                             i64 weyl_cap = kDefaultWeylCap);
HilbertReport hilbert_series(const RootSystem& rs, const ParabolicSubset& p,
                             const std::vector<WeylElement>& weyl, const PartitionFn& partition,
                             const Weight& mu, int max_degree,
                             PathCheck check = PathCheck::Always);

// dims[m] = sum_lambda coeff_m(terms[lambda]) * dim V_{dual lambda}.
std::vector<i64> dimension_series(const RootSystem& rs, const GradedCharacter& gc);

}  // namespace qmult
