#pragma once

// Weyl group enumeration and chamber arithmetic. Elements carry a reduced word
// (1-based reflection indices, product read left to right) together with the
// matching action matrix on fundamental-weight coordinates.

#include <vector>

#include "qmult/root_system.hpp"

namespace qmult {

// Covers E6 (|W| = 51840); full E7/E8 enumeration is refused by default.
inline constexpr i64 kDefaultWeylCap = 200000;

struct WeylElement {
  std::vector<int> reduced_word;  // w = s_{word[0]} s_{word[1]} ...
  IntMatrix action;               // product of the word's reflection matrices
  int length = 0;                 // = reduced_word.size()
};

// |W| from the standard order formulas, without enumeration.
i64 weyl_order(Series series, int rank);

// BFS over reduced words, deduplicated by the image of rho; the identity comes
// first and elements appear in nondecreasing length. Throws CapExceededError
// when |W| > cap.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, i64 cap = kDefaultWeylCap);

Weight act(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

inline int sign(const WeylElement& w) { return (w.length % 2 == 0) ? 1 : -1; }

struct ChamberResult {
  Weight dominant_rep;
  WeylElement element;  // element applied to the input yields dominant_rep
  bool regular = false; // true iff all coordinates of dominant_rep are > 0
};

// Repeatedly reflects at the smallest negative coordinate. The accumulated
// word is reduced: each step removes exactly one inversion.
ChamberResult to_dominant_chamber(const RootSystem& rs, const Weight& lambda);

// Exact determinant (Bareiss elimination); used to cross-check sign().
i64 matrix_determinant(const IntMatrix& m);

}  // namespace qmult
