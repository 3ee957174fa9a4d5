#pragma once

// Polynomials in q with exact integer coefficients. Trailing zeros are always
// trimmed; the zero polynomial has an empty coefficient vector.

#include <string>
#include <vector>

#include "qmult/numeric.hpp"

namespace qmult {

class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<i64> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPolynomial one() { return QPolynomial({1}); }
  static QPolynomial q_power(int m);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  i64 coeff(int m) const;
  const std::vector<i64>& coeffs() const { return coeffs_; }

  void add_term(int m, i64 c);                       // coeff(m) += c, checked
  void add_shifted(const QPolynomial& p, int shift); // *this += q^shift * p
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

  i64 at_one() const;  // evaluation at q = 1

  QPolynomial truncated(int max_degree) const;
  bool has_term_above(int max_degree) const;
  bool all_coeffs_nonnegative() const;

  bool operator==(const QPolynomial&) const = default;

  // "0", "1", "q", "q + q^2", "2 q - q^3", ... Unit coefficients are omitted.
  std::string text() const;

 private:
  void trim();
  std::vector<i64> coeffs_;  // coeffs_[m] is the coefficient of q^m
};

}  // namespace qmult
