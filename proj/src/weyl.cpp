#include "qmult/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace qmult {

namespace {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const int n = static_cast<int>(a.size());
  IntMatrix out(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const i64 aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        out[i][j] = checked_add(out[i][j], checked_mul(aik, b[k][j]));
    }
  return out;
}

// Image of rho (the all-ones vector) under the action matrix: row sums.
std::vector<i64> rho_image(const IntMatrix& m) {
  std::vector<i64> key(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (i64 v : m[i]) key[i] = checked_add(key[i], v);
  return key;
}

i64 factorial(int n) {
  i64 f = 1;
  for (int k = 2; k <= n; ++k) f = checked_mul(f, k);
  return f;
}

i64 pow2(int n) {
  i64 p = 1;
  for (int k = 0; k < n; ++k) p = checked_mul(p, 2);
  return p;
}

}  // namespace

i64 weyl_order(Series series, int rank) {
  switch (series) {
    case Series::A: return factorial(rank + 1);
    case Series::B:
    case Series::C: return checked_mul(pow2(rank), factorial(rank));
    case Series::D: return checked_mul(pow2(rank - 1), factorial(rank));
    case Series::E: return rank == 6 ? 51840 : (rank == 7 ? 2903040 : 696729600);
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  throw std::invalid_argument("unknown series");
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, i64 cap) {
  const i64 order = weyl_order(rs.series, rs.rank);
  if (order > cap)
    throw CapExceededError("Weyl group of " + type_name(rs.series, rs.rank) + " has order " +
                           std::to_string(order) + ", above the cap " + std::to_string(cap));

  std::vector<WeylElement> out;
  out.reserve(static_cast<std::size_t>(order));
  out.push_back({{}, identity_matrix(rs.rank), 0});

  std::map<std::vector<i64>, std::size_t> seen;  // keyed by the image of rho
  seen.emplace(rho_image(out[0].action), 0);

  // BFS by left multiplication; first discovery happens at minimal length, so
  // the concatenated word is reduced.
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rs.rank; ++i) {
      IntMatrix next = mat_mul(rs.simple_reflection_matrices[i], out[head].action);
      auto key = rho_image(next);
      if (seen.contains(key)) continue;
      WeylElement w;
      w.reduced_word.reserve(out[head].reduced_word.size() + 1);
      w.reduced_word.push_back(i + 1);
      w.reduced_word.insert(w.reduced_word.end(), out[head].reduced_word.begin(),
                            out[head].reduced_word.end());
      w.length = out[head].length + 1;
      w.action = std::move(next);
      assert(matrix_determinant(w.action) == sign(w));
      seen.emplace(std::move(key), out.size());
      out.push_back(std::move(w));
    }
  }

  if (static_cast<i64>(out.size()) != order)
    throw std::logic_error("Weyl enumeration found " + std::to_string(out.size()) +
                           " elements, expected " + std::to_string(order));
  return out;
}

Weight act(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank)
    throw std::invalid_argument("weight rank mismatch");
  std::vector<i64> out(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      out[i] = checked_add(out[i], checked_mul(w.action[i][j], lambda.coords[j]));
  return Weight(std::move(out));
}

ChamberResult to_dominant_chamber(const RootSystem& rs, const Weight& lambda) {
  ChamberResult res;
  res.dominant_rep = lambda;
  std::vector<int> word;  // reflections in application order
  IntMatrix action = identity_matrix(rs.rank);
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (res.dominant_rep.coords[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    // (s_i w)_k = w_k - w_i C[k][i]
    const i64 wi = res.dominant_rep.coords[neg];
    for (int k = 0; k < rs.rank; ++k)
      res.dominant_rep.coords[k] =
          checked_sub(res.dominant_rep.coords[k], checked_mul(wi, rs.cartan[k][neg]));
    action = mat_mul(rs.simple_reflection_matrices[neg], action);
    word.push_back(neg + 1);
  }
  std::reverse(word.begin(), word.end());  // product reads left to right
  res.element.length = static_cast<int>(word.size());
  res.element.reduced_word = std::move(word);
  res.element.action = std::move(action);
  assert(matrix_determinant(res.element.action) == sign(res.element));
  res.regular = std::all_of(res.dominant_rep.coords.begin(), res.dominant_rep.coords.end(),
                            [](i64 c) { return c > 0; });
  return res;
}

i64 matrix_determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination; all intermediate divisions are exact.
  const int n = static_cast<int>(m.size());
  IntMatrix a = m;
  i64 sign_flips = 1;
  i64 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) { swap_row = r; break; }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign_flips = -sign_flips;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j])) / prev;
    prev = a[k][k];
  }
  return checked_mul(sign_flips, a[n - 1][n - 1]);
}

}  // namespace qmult
