#include "ratcat/qpolynomial.hpp"

#include <algorithm>
#include <cctype>

#include "ratcat/errors.hpp"

namespace ratcat {

QPolynomial::QPolynomial(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(int degree, const mpz_class& coeff) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class QPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

mpz_class QPolynomial::at_one() const {
  mpz_class s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

bool QPolynomial::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return x >= 0; });
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

std::string QPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const mpz_class& x = c_[i];
    if (x == 0) continue;
    mpz_class mag = abs(x);
    if (out.empty()) {
      if (x < 0) out += '-';
    } else {
      out += x < 0 ? '-' : '+';
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

DivisionResult divide(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const mpz_class lead = den.coeffs().back();
  if (lead != 1 && lead != -1) throw Error(ErrorCode::InvalidArgument, "divisor must have unit leading coefficient");
  std::vector<mpz_class> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {QPolynomial(), num};
  std::vector<mpz_class> quot(static_cast<std::size_t>(num.degree() - dd) + 1, 0);
  for (int i = num.degree(); i >= dd; --i) {
    const mpz_class factor = rem[static_cast<std::size_t>(i)] * lead;  // lead is its own inverse
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial exact_divide(const QPolynomial& num, const QPolynomial& den) {
  DivisionResult r = divide(num, den);
  if (!r.remainder.is_zero()) {
    throw Error(ErrorCode::DivisionRemainder, "(" + num.to_string() + ") / (" + den.to_string() +
                                                  ") leaves remainder " + r.remainder.to_string());
  }
  return std::move(r.quotient);
}

QPolynomial parse_qpolynomial(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  QPolynomial out;
  std::size_t pos = 0;
  auto fail = [&] { throw Error(ErrorCode::ParseError, "bad polynomial '" + text + "'"); };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
    int exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (digits.empty()) fail();
      ++pos;
      if (pos >= s.size() || s[pos] != 'q') fail();
    }
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) e += s[pos++];
        if (e.empty()) fail();
        exponent = std::stoi(e);
      }
    } else if (digits.empty()) {
      fail();
    }
    out += QPolynomial::monomial(exponent, sign * coeff);
  }
  return out;
}

}  // namespace ratcat
