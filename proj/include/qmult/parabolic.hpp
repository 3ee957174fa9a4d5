#pragma once

// Standard parabolic subgroups P = P_Pi given by a subset Pi of the simple
// roots: the root partition Phi = Xi_+ | Xi_0 | Xi_-, P-dominance, the doubled
// half sum of nilradical roots, the abelian-nilradical test, and the case
// classifier for the cohomological vanishing condition.

#include <vector>

#include "qmult/root_system.hpp"

namespace qmult {

struct ParabolicSubset {
  std::vector<int> levi_indices;  // sorted, unique, 1-based Bourbaki indices

  bool is_borel() const { return levi_indices.empty(); }
  bool contains(int i) const;
};

// Validates indices and rejects Pi = Delta (P = G is not a proper parabolic).
ParabolicSubset make_parabolic(const RootSystem& rs, std::vector<int> levi_indices);

// Xi_+: positive roots with some coordinate outside Pi, in root-system order.
std::vector<RootVector> nilradical_roots(const RootSystem& rs, const ParabolicSubset& p);

// <lambda, alpha_i^vee> >= 0 for all i in Pi. The trivial module's weight is
// P-dominant; some sources state this with a strict inequality, which would
// exclude it.
bool is_p_dominant(const RootSystem& rs, const ParabolicSubset& p, const Weight& lambda);

// Sum of the roots in Xi_+ (i.e. 2 rho_P), in fundamental coordinates; doubled
// so it stays in the integral weight lattice.
Weight two_rho_p(const RootSystem& rs, const ParabolicSubset& p);

// True iff no sum of two Xi_+ roots is a root (abelian nilradical).
bool is_hermitian_symmetric(const RootSystem& rs, const ParabolicSubset& p);

enum class VanishingCase {
  LineBundleDominant,
  MinimalParabolic,
  TwistedRegular,
  TypeARegular,
  HermitianSymmetric,
  Unknown,
};

const char* vanishing_case_name(VanishingCase c);

// First matching tag in the declaration order above; Unknown means the
// vanishing condition is not guaranteed by any of the known cases, not that it
// fails. Requires mu P-dominant.
VanishingCase vanishing_case(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu);

}  // namespace qmult
