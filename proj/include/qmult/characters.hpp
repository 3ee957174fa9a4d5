#pragma once

// Character bookkeeping and independent oracles: Freudenthal weight
// multiplicities, the Weyl dimension formula, duals via the longest element,
// and Euler characteristics of line bundles on the full flag manifold.

#include <map>
#include <optional>

#include "qmult/root_system.hpp"
#include "qmult/weyl.hpp"

namespace qmult {

// W-invariant multiplicity map of an irreducible module.
struct WeightCharacter {
  std::map<Weight, i64> mults;

  i64 mult(const Weight& w) const {
    auto it = mults.find(w);
    return it == mults.end() ? 0 : it->second;
  }
  i64 total() const;  // = dim of the module
};

// Full weight-multiplicity map of the irreducible module with highest weight
// lambda, by the Freudenthal recursion. The invariant form is scaled so all
// products are integers; multiplicities do not depend on the scale.
WeightCharacter freudenthal(const RootSystem& rs, const Weight& lambda);

// prod_{alpha > 0} (lambda+rho, alpha) / (rho, alpha), exact.
i64 weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Highest weight of the dual module: -w0(lambda), computed as the dominant
// representative of -lambda.
Weight dual_highest_weight(const RootSystem& rs, const Weight& lambda);

// Euler characteristic of a line bundle on G/B, as a signed irreducible
// character or zero. sign == 0 encodes the zero value (singular wall).
struct SignedWeight {
  int sign = 0;
  std::optional<Weight> highest_weight;

  bool is_zero() const { return sign == 0; }
  static SignedWeight zero() { return {}; }
};

// chi(G/B, L_{-tau}) = sign(w) ch V_lambda^* where w(tau+rho) = lambda+rho is
// dominant regular, and 0 when tau+rho lies on a wall. Dominant tau gives
// (+1, tau): the space of sections of L_{-tau} is V_tau^*.
SignedWeight bwb_euler(const RootSystem& rs, const Weight& tau);

}  // namespace qmult
