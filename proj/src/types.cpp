#include "qmult/types.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qmult {

SimpleType parse_type(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("type name too short: '" + name + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (c < 'A' || c > 'G') throw std::invalid_argument("unknown series letter in '" + name + "'");
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("malformed rank in type '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
    if (rank > 1000) throw std::invalid_argument("rank out of range in '" + name + "'");
  }
  return {static_cast<Series>(c), rank};
}

std::string type_name(Series series, int rank) {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

i64 RootVector::height() const {
  i64 h = 0;
  for (i64 c : coords) h = checked_add(h, c);
  return h;
}

namespace {
std::vector<i64> zip_coords(const std::vector<i64>& a, const std::vector<i64>& b, bool minus) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch in vector arithmetic");
  std::vector<i64> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = minus ? checked_sub(a[i], b[i]) : checked_add(a[i], b[i]);
  return out;
}

std::string coords_str(const std::vector<i64>& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}
}  // namespace

Weight operator+(const Weight& a, const Weight& b) { return Weight(zip_coords(a.coords, b.coords, false)); }
Weight operator-(const Weight& a, const Weight& b) { return Weight(zip_coords(a.coords, b.coords, true)); }
Weight operator-(const Weight& a) {
  std::vector<i64> out(a.coords.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_neg(a.coords[i]);
  return Weight(std::move(out));
}
RootVector operator+(const RootVector& a, const RootVector& b) {
  return RootVector(zip_coords(a.coords, b.coords, false));
}

std::string str(const Weight& w) { return coords_str(w.coords); }
std::string str(const RootVector& v) { return coords_str(v.coords); }
std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << str(w); }
std::ostream& operator<<(std::ostream& os, const RootVector& v) { return os << str(v); }

}  // namespace qmult
