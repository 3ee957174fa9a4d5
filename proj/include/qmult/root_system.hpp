#pragma once

// Root data for the simple types A_n (n>=1), B_n (n>=2), C_n (n>=2),
// D_n (n>=4), E6/E7/E8, F4, G2 in Bourbaki numbering. Positive roots are
// generated by reflection closure from the simple roots and stored in a fixed
// order (height, then lexicographic coordinates), so every downstream
// enumeration is deterministic.

#include <optional>
#include <vector>

#include "qmult/types.hpp"

namespace qmult {

// Immutable after build_root_system; all operations on it are pure.
struct RootSystem {
  Series series;
  int rank;

  // cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>.
  IntMatrix cartan;
  std::vector<RootVector> positive_roots;  // sorted by (height, lex)
  RootVector highest_root;                 // unique root of maximal height
  // simple_reflection_matrices[i] acts on fundamental-weight coordinates.
  std::vector<IntMatrix> simple_reflection_matrices;

  // Derived tables.
  std::vector<i64> root_norms;             // (alpha_i, alpha_i)/2, integer-scaled invariant form
  std::vector<std::vector<Rat>> cartan_inverse;
  std::vector<Weight> positive_root_weights;  // fundamental coordinates of positive_roots
};

RootSystem build_root_system(Series series, int rank);
RootSystem build_root_system(const SimpleType& t);

// Exact coordinates of w in the simple-root basis (solves cartan * x = coords).
std::vector<Rat> to_root_basis(const RootSystem& rs, const Weight& w);

// <w, alpha_i^vee> for a 1-based Bourbaki index i.
i64 pairing(const RootSystem& rs, const Weight& w, int i);

// Half sum of positive roots: all-ones in fundamental coordinates.
Weight rho(const RootSystem& rs);

// Fundamental coordinates of a root-basis vector (integer matrix product).
Weight root_to_weight(const RootSystem& rs, const RootVector& v);

// Height of w as a rational: sum of its simple-root coordinates.
Rat weight_height(const RootSystem& rs, const Weight& w);

// Root coordinates of w if they are all nonnegative integers, else nothing.
// This is the support test of the partition function.
std::optional<std::vector<i64>> nonneg_integral_root_coords(const RootSystem& rs,
                                                            const Weight& w);

}  // namespace qmult
