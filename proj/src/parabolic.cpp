#include "qmult/parabolic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qmult {

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(levi_indices.begin(), levi_indices.end(), i);
}

ParabolicSubset make_parabolic(const RootSystem& rs, std::vector<int> levi_indices) {
  std::sort(levi_indices.begin(), levi_indices.end());
  levi_indices.erase(std::unique(levi_indices.begin(), levi_indices.end()), levi_indices.end());
  for (int i : levi_indices)
    if (i < 1 || i > rs.rank)
      throw std::invalid_argument("Levi index " + std::to_string(i) + " out of range 1.." +
                                  std::to_string(rs.rank));
  if (static_cast<int>(levi_indices.size()) == rs.rank)
    throw std::invalid_argument("Levi set equals all simple roots; P = G is not a proper "
                                "parabolic subgroup");
  return ParabolicSubset{std::move(levi_indices)};
}

std::vector<RootVector> nilradical_roots(const RootSystem& rs, const ParabolicSubset& p) {
  std::vector<RootVector> out;
  for (const RootVector& r : rs.positive_roots) {
    bool levi_supported = true;
    for (int j = 0; j < rs.rank; ++j)
      if (r.coords[j] != 0 && !p.contains(j + 1)) { levi_supported = false; break; }
    if (!levi_supported) out.push_back(r);
  }
  return out;
}

bool is_p_dominant(const RootSystem& rs, const ParabolicSubset& p, const Weight& lambda) {
  for (int i : p.levi_indices)
    if (pairing(rs, lambda, i) < 0) return false;
  return true;
}

Weight two_rho_p(const RootSystem& rs, const ParabolicSubset& p) {
  std::vector<i64> sum(rs.rank, 0);
  for (const RootVector& r : nilradical_roots(rs, p))
    for (int j = 0; j < rs.rank; ++j) sum[j] = checked_add(sum[j], r.coords[j]);
  return root_to_weight(rs, RootVector(std::move(sum)));
}

bool is_hermitian_symmetric(const RootSystem& rs, const ParabolicSubset& p) {
  const auto xi = nilradical_roots(rs, p);
  std::set<std::vector<i64>> roots;
  for (const RootVector& r : rs.positive_roots) roots.insert(r.coords);
  for (std::size_t a = 0; a < xi.size(); ++a)
    for (std::size_t b = a; b < xi.size(); ++b) {
      std::vector<i64> sum(rs.rank);
      for (int j = 0; j < rs.rank; ++j) sum[j] = checked_add(xi[a].coords[j], xi[b].coords[j]);
      if (roots.contains(sum)) return false;
    }
  return true;
}

const char* vanishing_case_name(VanishingCase c) {
  switch (c) {
    case VanishingCase::LineBundleDominant: return "LineBundleDominant";
    case VanishingCase::MinimalParabolic: return "MinimalParabolic";
    case VanishingCase::TwistedRegular: return "TwistedRegular";
    case VanishingCase::TypeARegular: return "TypeARegular";
    case VanishingCase::HermitianSymmetric: return "HermitianSymmetric";
    case VanishingCase::Unknown: return "Unknown";
  }
  return "Unknown";
}

VanishingCase vanishing_case(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu) {
  if (!is_p_dominant(rs, p, mu))
    throw std::invalid_argument("vanishing_case requires a P-dominant weight, got " + str(mu));
  const bool dominant =
      std::all_of(mu.coords.begin(), mu.coords.end(), [](i64 c) { return c >= 0; });

  if (p.is_borel() && dominant) return VanishingCase::LineBundleDominant;
  if (p.levi_indices.size() == 1 && dominant) return VanishingCase::MinimalParabolic;

  // mu = mu' - 2 rho_P with mu' dominant and nonsingular on the Levi wall.
  const Weight twisted = mu + two_rho_p(rs, p);
  const bool twisted_dominant =
      std::all_of(twisted.coords.begin(), twisted.coords.end(), [](i64 c) { return c >= 0; });
  if (twisted_dominant) {
    bool p_regular = true;
    for (int i : p.levi_indices)
      if (pairing(rs, twisted, i) == 0) { p_regular = false; break; }
    if (p_regular) return VanishingCase::TwistedRegular;
  }

  if (rs.series == Series::A && dominant &&
      std::all_of(mu.coords.begin(), mu.coords.end(), [](i64 c) { return c >= 1; }))
    return VanishingCase::TypeARegular;
  if (dominant && is_hermitian_symmetric(rs, p)) return VanishingCase::HermitianSymmetric;
  return VanishingCase::Unknown;
}

}  // namespace qmult
