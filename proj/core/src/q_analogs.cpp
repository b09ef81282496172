#include "ratcat/q_analogs.hpp"

#include <map>
#include <mutex>
#include <string>

#include "ratcat/errors.hpp"

namespace ratcat {

namespace {

QPolynomial checked(QPolynomial p, const std::string& what) {
  if (!p.nonnegative()) throw Error(ErrorCode::NegativeCoefficient, what + " = " + p.to_string());
  return p;
}

}  // namespace

QPolynomial q_int(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "q-integer of a negative number");
  return QPolynomial(std::vector<mpz_class>(static_cast<std::size_t>(n), 1));
}

QPolynomial q_factorial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "q-factorial of a negative number");
  QPolynomial out(1);
  for (int i = 2; i <= n; ++i) out *= q_int(i);
  return out;
}

QPolynomial q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return QPolynomial();
  return exact_divide(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

QPolynomial q_binomial_pascal(int n, int k) {
  if (k < 0 || n < 0 || k > n) return QPolynomial();
  // [n,k] = [n-1,k-1] + q^k [n-1,k], row by row.
  std::vector<QPolynomial> row{QPolynomial(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<QPolynomial> next(static_cast<std::size_t>(m) + 1);
    next.front() = 1;
    next.back() = 1;
    for (int j = 1; j < m; ++j) {
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + QPolynomial::monomial(j) * row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

QPolynomial q_catalan(const Slope& slope) {
  const int a = slope.a();
  const int b = slope.b();
  return checked(exact_divide(q_factorial(a + b - 1), q_factorial(a) * q_factorial(b)),
                 "Cat_q(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

QPolynomial q_narayana(const Slope& slope, int k) {
  const int a = slope.a();
  const int b = slope.b();
  if (k < 1 || k > a) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= a");
  return checked(exact_divide(q_binomial(a, k) * q_binomial(b - 1, k - 1), q_int(a)),
                 "Nar_q(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")");
}

QPolynomial q_kreweras(const Slope& slope, std::span<const int> r) {
  const int a = slope.a();
  const int b = slope.b();
  if (r.size() != static_cast<std::size_t>(a)) throw Error(ErrorCode::InvalidVector, "r must have length a");
  long weighted = 0;
  int k = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) throw Error(ErrorCode::InvalidVector, "negative entry in r");
    weighted += static_cast<long>(i + 1) * r[i];
    k += r[i];
  }
  if (weighted != a) throw Error(ErrorCode::InvalidVector, "sum of i*r_i must equal a");
  if (k > b) return QPolynomial();
  QPolynomial den = q_factorial(b - k);
  for (int ri : r) den *= q_factorial(ri);
  return checked(exact_divide(q_factorial(b - 1), den), "Krew_q");
}

QPolynomial cyclotomic(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex guard;
  static std::map<int, QPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(guard);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  QPolynomial out = QPolynomial::monomial(k) - QPolynomial(1);
  for (int d = 1; d < k; ++d)
    if (k % d == 0) out = exact_divide(out, cyclotomic(d));
  std::lock_guard<std::mutex> lock(guard);
  cache.emplace(k, out);
  return out;
}

mpz_class eval_at_primitive_root(const QPolynomial& p, int k) {
  if (k == 1) return p.at_one();
  const QPolynomial r = divide(p, cyclotomic(k)).remainder;
  if (r.degree() > 0) {
    throw Error(ErrorCode::NonIntegerValue,
                "residue of " + p.to_string() + " mod Phi_" + std::to_string(k) + " is " + r.to_string());
  }
  return r.coeff(0);
}

}  // namespace ratcat
