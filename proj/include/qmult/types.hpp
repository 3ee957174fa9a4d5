#pragma once

// Basic domain vocabulary: simple types A..G, weights in the fundamental-weight
// basis, and root vectors in the simple-root basis. All simple-root indexing on
// the public surface is 1-based Bourbaki numbering; vector storage is 0-based.

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "qmult/numeric.hpp"

namespace qmult {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Series series;
  int rank;
};

// Parses "B3" style names. Rank validity is checked in build_root_system.
SimpleType parse_type(const std::string& name);
std::string type_name(Series series, int rank);

// Integer coordinates w.r.t. the fundamental weights: coords[i-1] = <w, alpha_i^vee>.
struct Weight {
  std::vector<i64> coords;

  Weight() = default;
  explicit Weight(std::vector<i64> c) : coords(std::move(c)) {}

  auto operator<=>(const Weight&) const = default;
  std::size_t rank() const { return coords.size(); }
};

// Integer coordinates w.r.t. the simple roots.
struct RootVector {
  std::vector<i64> coords;

  RootVector() = default;
  explicit RootVector(std::vector<i64> c) : coords(std::move(c)) {}

  auto operator<=>(const RootVector&) const = default;
  i64 height() const;
};

using IntMatrix = std::vector<std::vector<i64>>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
RootVector operator+(const RootVector& a, const RootVector& b);

std::string str(const Weight& w);      // "(1,0)"
std::string str(const RootVector& v);  // "(1,2)"
std::ostream& operator<<(std::ostream& os, const Weight& w);
std::ostream& operator<<(std::ostream& os, const RootVector& v);

}  // namespace qmult
