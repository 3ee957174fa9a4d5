#include "qmult/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmult {

namespace {

bool is_dominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](i64 c) { return c >= 0; });
}

void require_dominant(const Weight& w, const char* who) {
  if (!is_dominant(w))
    throw std::invalid_argument(std::string(who) + " requires a dominant weight, got " + str(w));
}

// Integer-scaled W-invariant symmetric form. With d_i = rs.root_norms[i]:
//   (alpha_i, alpha_j) = d_i * cartan[i][j]
//   (omega_i, alpha_j) = delta_ij * d_j
// Multiplicity and dimension formulas only use ratios, so the scale cancels.
struct InnerForm {
  const RootSystem& rs;

  // (w, beta) for w in fundamental coordinates, beta in root coordinates.
  i64 weight_root(const std::vector<i64>& w, const std::vector<i64>& beta) const {
    i64 s = 0;
    for (int j = 0; j < rs.rank; ++j)
      s = checked_add(s, checked_mul(w[j], checked_mul(rs.root_norms[j], beta[j])));
    return s;
  }

  // (beta, gamma) for both in root coordinates.
  i64 root_root(const std::vector<i64>& beta, const std::vector<i64>& gamma) const {
    i64 s = 0;
    for (int i = 0; i < rs.rank; ++i) {
      if (beta[i] == 0) continue;
      i64 row = 0;
      for (int j = 0; j < rs.rank; ++j)
        row = checked_add(row, checked_mul(checked_mul(rs.root_norms[i], rs.cartan[i][j]),
                                           gamma[j]));
      s = checked_add(s, checked_mul(beta[i], row));
    }
    return s;
  }
};

// All beta with 0 <= beta <= bound coordinatewise, grouped by height.
std::vector<std::vector<std::vector<i64>>> box_by_height(const std::vector<i64>& bound) {
  i64 max_height = 0;
  for (i64 b : bound) max_height = checked_add(max_height, b);
  std::vector<std::vector<std::vector<i64>>> groups(static_cast<std::size_t>(max_height) + 1);
  std::vector<i64> cur(bound.size(), 0);
  for (;;) {
    i64 h = 0;
    for (i64 c : cur) h += c;
    groups[static_cast<std::size_t>(h)].push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return groups;
}

}  // namespace

i64 WeightCharacter::total() const {
  i64 t = 0;
  for (const auto& [w, m] : mults) t = checked_add(t, m);
  return t;
}

WeightCharacter freudenthal(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda, "freudenthal");
  const InnerForm form{rs};
  const Weight lambda_rho = lambda + rho(rs);

  // The support lies between w0(lambda) and lambda; parametrize weights as
  // lambda - beta with beta in the root-coordinate box [0, lambda - w0 lambda].
  const Weight span = lambda + dual_highest_weight(rs, lambda);
  const auto bound = nonneg_integral_root_coords(rs, span);
  if (!bound) throw std::logic_error("lambda - w0(lambda) is not in the root cone");

  std::map<std::vector<i64>, i64> mult;  // keyed by beta
  const auto groups = box_by_height(*bound);
  std::vector<i64> gamma(rs.rank);
  for (std::size_t h = 0; h < groups.size(); ++h) {
    for (const auto& beta : groups[h]) {
      if (h == 0) {
        mult.emplace(beta, 1);
        continue;
      }
      // ((l+r,l+r) - (n+r,n+r)) m(n) = 2 sum_{a>0} sum_{k>=1} (n+ka, a) m(n+ka)
      // with n = lambda - beta; the left side reduces to 2(l+r,beta)-(beta,beta).
      const i64 denom = checked_sub(
          checked_mul(2, form.weight_root(lambda_rho.coords, beta)), form.root_root(beta, beta));
      i64 numer = 0;
      for (const RootVector& alpha : rs.positive_roots) {
        const i64 lambda_alpha = form.weight_root(lambda.coords, alpha.coords);
        for (i64 k = 1;; ++k) {
          bool inside = true;
          for (int c = 0; c < rs.rank; ++c) {
            gamma[c] = beta[c] - k * alpha.coords[c];
            if (gamma[c] < 0) { inside = false; break; }
          }
          if (!inside) break;
          const auto it = mult.find(gamma);
          if (it == mult.end()) continue;
          // (lambda - gamma, alpha) summed with multiplicity.
          const i64 value =
              checked_sub(lambda_alpha, form.root_root(gamma, alpha.coords));
          numer = checked_add(numer, checked_mul(value, it->second));
        }
      }
      numer = checked_mul(2, numer);
      if (denom == 0) {
        if (numer != 0)
          throw std::logic_error("Freudenthal recursion hit a zero denominator with nonzero sum");
        continue;
      }
      if (numer % denom != 0)
        throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
      const i64 m = numer / denom;
      if (m != 0) mult.emplace(beta, m);
    }
  }

  WeightCharacter out;
  for (const auto& [beta, m] : mult)
    out.mults.emplace(lambda - root_to_weight(rs, RootVector(beta)), m);
  return out;
}

i64 weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda, "weyl_dimension");
  const InnerForm form{rs};
  const Weight numer_w = lambda + rho(rs);
  const Weight denom_w = rho(rs);
  Rat dim(1);
  for (const RootVector& alpha : rs.positive_roots)
    dim *= Rat(form.weight_root(numer_w.coords, alpha.coords),
               form.weight_root(denom_w.coords, alpha.coords));
  if (!dim.is_integer()) throw std::logic_error("Weyl dimension came out non-integral");
  return dim.num();
}

Weight dual_highest_weight(const RootSystem& rs, const Weight& lambda) {
  require_dominant(lambda, "dual_highest_weight");
  return to_dominant_chamber(rs, -lambda).dominant_rep;
}

SignedWeight bwb_euler(const RootSystem& rs, const Weight& tau) {
  const ChamberResult chamber = to_dominant_chamber(rs, tau + rho(rs));
  if (!chamber.regular) return SignedWeight::zero();
  return SignedWeight{sign(chamber.element), chamber.dominant_rep - rho(rs)};
}

}  // namespace qmult
