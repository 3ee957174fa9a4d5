#include "qmult/qpolynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmult {

QPolynomial QPolynomial::q_power(int m) {
  if (m < 0) throw std::invalid_argument("negative q exponent");
  std::vector<i64> c(static_cast<std::size_t>(m) + 1, 0);
  c.back() = 1;
  return QPolynomial(std::move(c));
}

i64 QPolynomial::coeff(int m) const {
  if (m < 0 || m >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(m)];
}

void QPolynomial::add_term(int m, i64 c) {
  if (c == 0) return;
  if (m < 0) throw std::invalid_argument("negative q exponent");
  if (m >= static_cast<int>(coeffs_.size())) coeffs_.resize(static_cast<std::size_t>(m) + 1, 0);
  coeffs_[static_cast<std::size_t>(m)] = checked_add(coeffs_[static_cast<std::size_t>(m)], c);
  trim();
}

void QPolynomial::add_shifted(const QPolynomial& p, int shift) {
  if (p.is_zero()) return;
  const std::size_t need = p.coeffs_.size() + static_cast<std::size_t>(shift);
  if (coeffs_.size() < need) coeffs_.resize(need, 0);
  for (std::size_t m = 0; m < p.coeffs_.size(); ++m)
    coeffs_[m + shift] = checked_add(coeffs_[m + shift], p.coeffs_[m]);
  trim();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  add_shifted(o, 0);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.is_zero()) return *this;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t m = 0; m < o.coeffs_.size(); ++m)
    coeffs_[m] = checked_sub(coeffs_[m], o.coeffs_[m]);
  trim();
  return *this;
}

i64 QPolynomial::at_one() const {
  i64 s = 0;
  for (i64 c : coeffs_) s = checked_add(s, c);
  return s;
}

QPolynomial QPolynomial::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  if (degree() <= max_degree) return *this;
  return QPolynomial(std::vector<i64>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

bool QPolynomial::has_term_above(int max_degree) const { return degree() > max_degree; }

bool QPolynomial::all_coeffs_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 c) { return c >= 0; });
}

std::string QPolynomial::text() const {
  if (is_zero()) return "0";
  std::string out;
  for (int m = 0; m <= degree(); ++m) {
    const i64 c = coeffs_[static_cast<std::size_t>(m)];
    if (c == 0) continue;
    const i64 mag = c < 0 ? checked_neg(c) : c;
    std::string term;
    if (m == 0) {
      term = std::to_string(mag);
    } else {
      if (mag != 1) term = std::to_string(mag) + " ";
      term += m == 1 ? "q" : "q^" + std::to_string(m);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace qmult
