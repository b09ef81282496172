#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace ratcat {

// Polynomial in q with integer coefficients; coeffs()[i] multiplies q^i.
// Trailing zeros are always trimmed, so zero has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit QPolynomial(std::vector<mpz_class> coeffs);

  static QPolynomial monomial(int degree, const mpz_class& coeff = 1);

  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for zero.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  mpz_class coeff(int i) const;
  mpz_class at_one() const;
  bool nonnegative() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);

  friend QPolynomial operator+(QPolynomial x, const QPolynomial& y) { return x += y; }
  friend QPolynomial operator-(QPolynomial x, const QPolynomial& y) { return x -= y; }
  friend QPolynomial operator*(QPolynomial x, const QPolynomial& y) { return x *= y; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

struct DivisionResult {
  QPolynomial quotient;
  QPolynomial remainder;
};

// Division by a monic (or unit-leading) divisor keeps integer coefficients;
// anything else throws InvalidArgument.
DivisionResult divide(const QPolynomial& num, const QPolynomial& den);
// Throws DivisionRemainder unless den divides num.
QPolynomial exact_divide(const QPolynomial& num, const QPolynomial& den);

QPolynomial parse_qpolynomial(const std::string& text);

}  // namespace ratcat
