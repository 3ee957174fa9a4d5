#include "qmult/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qmult {

namespace {

i64 expected_positive_root_count(Series s, int n) {
  switch (s) {
    case Series::A: return static_cast<i64>(n) * (n + 1) / 2;
    case Series::B:
    case Series::C: return static_cast<i64>(n) * n;
    case Series::D: return static_cast<i64>(n) * (n - 1);
    case Series::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
  }
  throw std::invalid_argument("unknown series");
}

void validate_type(Series s, int n) {
  const bool ok = (s == Series::A && n >= 1) || (s == Series::B && n >= 2) ||
                  (s == Series::C && n >= 2) || (s == Series::D && n >= 4) ||
                  (s == Series::E && n >= 6 && n <= 8) || (s == Series::F && n == 4) ||
                  (s == Series::G && n == 2);
  if (!ok)
    throw std::invalid_argument("invalid simple type " + type_name(s, n) +
                                " (valid: A n>=1, B n>=2, C n>=2, D n>=4, E6/E7/E8, F4, G2)");
}

// cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>, Bourbaki numbering.
IntMatrix cartan_matrix(Series s, int n) {
  IntMatrix c(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i - 1][j - 1] = -1; c[j - 1][i - 1] = -1; };
  switch (s) {
    case Series::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      // alpha_n is the short root: <alpha_{n-1}, alpha_n^vee> = -2.
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Series::C:
      // alpha_n is the long root: <alpha_n, alpha_{n-1}^vee> = -2.
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (int i = 1; i <= n - 2; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Series::E:
      bond(1, 3); bond(3, 4); bond(4, 5); bond(5, 6);
      if (n >= 7) bond(6, 7);
      if (n >= 8) bond(7, 8);
      bond(2, 4);
      break;
    case Series::F:
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      bond(1, 2); bond(2, 3); bond(3, 4);
      c[2][1] = -2;
      break;
    case Series::G:
      // alpha_1 short, alpha_2 long; highest root 3 alpha_1 + 2 alpha_2.
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

// Integer scale factors d_i proportional to (alpha_i, alpha_i)/2, satisfying
// d_i * C[i][j] == d_j * C[j][i], normalized to smallest positive integers.
std::vector<i64> root_norm_scale(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Rat> d(n, Rat(0));
  std::vector<int> stack;
  d[0] = Rat(1);
  stack.push_back(0);
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || c[i][j] == 0 || !d[j].is_zero()) continue;
      d[j] = d[i] * Rat(c[i][j], c[j][i]);
      stack.push_back(j);
    }
  }
  i64 lcm_den = 1;
  for (const Rat& r : d) {
    if (r.is_zero()) throw std::logic_error("disconnected Dynkin diagram");
    lcm_den = std::lcm(lcm_den, r.den());
  }
  std::vector<i64> out(n);
  for (int i = 0; i < n; ++i) out[i] = checked_mul(d[i].num(), lcm_den / d[i].den());
  return out;
}

std::vector<std::vector<Rat>> invert_cartan(const IntMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(c[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) { pivot = r; break; }
    if (pivot < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(a[col], a[pivot]);
    const Rat inv = Rat(1) / a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

RootSystem build_root_system(Series series, int rank) {
  validate_type(series, rank);
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  rs.cartan = cartan_matrix(series, rank);

  // Closure of the simple roots under simple reflections, keeping positives.
  // s_i(beta) = beta - <beta, alpha_i^vee> e_i in simple-root coordinates.
  std::set<std::vector<i64>> seen;
  std::vector<std::vector<i64>> work;
  for (int i = 0; i < rank; ++i) {
    std::vector<i64> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    const std::vector<i64> beta = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < rank; ++i) {
      i64 pair = 0;
      for (int j = 0; j < rank; ++j) pair = checked_add(pair, checked_mul(rs.cartan[i][j], beta[j]));
      std::vector<i64> image = beta;
      image[i] = checked_sub(image[i], pair);
      if (std::all_of(image.begin(), image.end(), [](i64 x) { return x >= 0; }) &&
          seen.insert(image).second) {
        work.push_back(std::move(image));
      }
    }
  }

  rs.positive_roots.reserve(seen.size());
  for (const auto& coords : seen) rs.positive_roots.emplace_back(coords);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const RootVector& a, const RootVector& b) {
              const i64 ha = a.height(), hb = b.height();
              return ha != hb ? ha < hb : a.coords < b.coords;
            });

  const i64 expected = expected_positive_root_count(series, rank);
  if (static_cast<i64>(rs.positive_roots.size()) != expected)
    throw std::logic_error("positive root closure produced " +
                           std::to_string(rs.positive_roots.size()) + " roots for " +
                           type_name(series, rank) + ", expected " + std::to_string(expected));

  rs.highest_root = rs.positive_roots.back();
  if (rs.positive_roots.size() >= 2 &&
      rs.positive_roots[rs.positive_roots.size() - 2].height() == rs.highest_root.height())
    throw std::logic_error("highest root is not unique in " + type_name(series, rank));

  // (s_i w)_k = w_k - w_i * C[k][i] on fundamental coordinates.
  rs.simple_reflection_matrices.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    IntMatrix m(rank, std::vector<i64>(rank, 0));
    for (int k = 0; k < rank; ++k) m[k][k] = 1;
    for (int k = 0; k < rank; ++k) m[k][i] = checked_sub(m[k][i], rs.cartan[k][i]);
    rs.simple_reflection_matrices.push_back(std::move(m));
  }

  rs.root_norms = root_norm_scale(rs.cartan);
  rs.cartan_inverse = invert_cartan(rs.cartan);
  rs.positive_root_weights.reserve(rs.positive_roots.size());
  for (const auto& r : rs.positive_roots) rs.positive_root_weights.push_back(root_to_weight(rs, r));
  return rs;
}

RootSystem build_root_system(const SimpleType& t) { return build_root_system(t.series, t.rank); }

std::vector<Rat> to_root_basis(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.coords.size()) != rs.rank)
    throw std::invalid_argument("weight rank mismatch");
  std::vector<Rat> out(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) out[i] += rs.cartan_inverse[i][j] * Rat(w.coords[j]);
  return out;
}

i64 pairing(const RootSystem& rs, const Weight& w, int i) {
  if (i < 1 || i > rs.rank)
    throw std::invalid_argument("simple-root index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rs.rank));
  if (static_cast<int>(w.coords.size()) != rs.rank)
    throw std::invalid_argument("weight rank mismatch");
  return w.coords[i - 1];
}

Weight rho(const RootSystem& rs) { return Weight(std::vector<i64>(rs.rank, 1)); }

Weight root_to_weight(const RootSystem& rs, const RootVector& v) {
  if (static_cast<int>(v.coords.size()) != rs.rank)
    throw std::invalid_argument("root vector rank mismatch");
  std::vector<i64> out(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      out[i] = checked_add(out[i], checked_mul(rs.cartan[i][j], v.coords[j]));
  return Weight(std::move(out));
}

Rat weight_height(const RootSystem& rs, const Weight& w) {
  Rat h(0);
  for (const Rat& c : to_root_basis(rs, w)) h += c;
  return h;
}

std::optional<std::vector<i64>> nonneg_integral_root_coords(const RootSystem& rs,
                                                            const Weight& w) {
  const auto rc = to_root_basis(rs, w);
  std::vector<i64> out(rc.size());
  for (std::size_t i = 0; i < rc.size(); ++i) {
    if (!rc[i].is_integer() || rc[i].is_negative()) return std::nullopt;
    out[i] = rc[i].num();
  }
  return out;
}

}  // namespace qmult
