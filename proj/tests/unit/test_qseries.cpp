#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ratcat/csp.hpp"
#include "ratcat/errors.hpp"
#include "ratcat/q_analogs.hpp"
#include "ratcat/rational_nc.hpp"
#include "ratcat/symmetry.hpp"

using namespace ratcat;

TEST(QPolynomial, ArithmeticAndText) {
  const QPolynomial p = parse_qpolynomial("1+q+2*q^2");
  EXPECT_EQ(p.to_string(), "1+q+2*q^2");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p - p).is_zero(), true);
  EXPECT_EQ((q_int(2) * q_int(2)).to_string(), "1+2*q+q^2");
  EXPECT_EQ(parse_qpolynomial("-q^3+2").to_string(), "2-q^3");
  EXPECT_THROW(parse_qpolynomial("1+*q"), Error);
  EXPECT_THROW(exact_divide(q_int(3), q_int(2)), Error);
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(q_binomial(5, 0), QPolynomial(1));
  EXPECT_EQ(q_binomial(5, 2).to_string(), "1+q+2*q^2+2*q^3+2*q^4+q^5+q^6");
}

TEST(QBinomial, ThreeRoutesAgree) {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QPolynomial div = q_binomial(n, k);
      EXPECT_EQ(div, q_binomial_pascal(n, k));
      const auto coeffs = oracle::q_binomial_coeffs(n, k);
      ASSERT_EQ(div.coeffs().size(), coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) EXPECT_EQ(div.coeffs()[i], coeffs[i]);
      EXPECT_EQ(div.at_one(), oracle::binom(n, k));
    }
  }
}

TEST(QAnalogs, Examples) {
  EXPECT_EQ(q_catalan(Slope(2, 3)).to_string(), "1+q^2");
  EXPECT_EQ(q_kreweras(Slope(5, 7), std::vector<int>{1, 2, 0, 0, 0}).at_one(), 15);
  for (auto [a, b] : oracle::slopes_up_to(10)) {
    const Slope s(a, b);
    EXPECT_EQ(q_catalan(s).at_one(), oracle::rational_catalan(a, b));
    for (int k = 1; k <= a; ++k) EXPECT_EQ(q_narayana(s, k).at_one(), oracle::narayana(a, b, k));
    for (const auto& r : kreweras_vectors(a)) EXPECT_EQ(q_kreweras(s, r).at_one(), kreweras(s, r));
  }
}

TEST(Cyclotomic, Small) {
  EXPECT_EQ(cyclotomic(1).to_string(), "-1+q");
  EXPECT_EQ(cyclotomic(2).to_string(), "1+q");
  EXPECT_EQ(cyclotomic(6).to_string(), "1-q+q^2");
  EXPECT_EQ(cyclotomic(12).to_string(), "1-q^2+q^4");
  for (int k = 1; k <= 30; ++k) {
    QPolynomial product(1);
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) product *= cyclotomic(d);
    EXPECT_EQ(product, QPolynomial::monomial(k) - QPolynomial(1));
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval_at_primitive_root(parse_qpolynomial("1+q^2"), 2), 2);
  EXPECT_EQ(eval_at_primitive_root(parse_qpolynomial("1+3*q+q^5"), 1), 5);
  EXPECT_EQ(eval_at_primitive_root(q_catalan(Slope(3, 5)), 4), 1);
  EXPECT_THROW(eval_at_primitive_root(parse_qpolynomial("q"), 3), Error);
}

TEST(Eval, MatchesFloatingPoint) {
  for (auto [a, b] : oracle::slopes_up_to(10)) {
    const QPolynomial p = q_catalan(Slope(a, b));
    for (int k = 1; k <= b; ++k) {
      bool integral = false;
      const long numeric = oracle::numeric_eval(p, k, integral);
      if (!integral) {
        EXPECT_THROW(eval_at_primitive_root(p, k), Error);
      } else {
        EXPECT_EQ(eval_at_primitive_root(p, k), numeric);
      }
    }
  }
}

TEST(Csp, SmallCatalan) {
  const CspReport r = csp_verify(catalan_instance(Slope(2, 3)));
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(*r.rows[1].value, 2);
  EXPECT_EQ(r.rows[1].fixed, 2);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(csp_verify(catalan_instance(Slope(5, 8))).ok);
}

TEST(Csp, DetectsWrongPolynomial) {
  CspInstance inst = catalan_instance(Slope(3, 5));
  inst.polynomial = QPolynomial(7);
  EXPECT_FALSE(csp_verify(inst).ok);
}

TEST(Csp, RowsMatchBruteForce) {
  for (auto [a, b] : oracle::slopes_up_to(9)) {
    const Slope s(a, b);
    const auto xs = enumerate_nc(s);
    const CspReport r = csp_verify(catalan_instance(s));
    EXPECT_EQ(r.rows.front().fixed, static_cast<long>(xs.size()));
    for (const auto& row : r.rows) EXPECT_EQ(row.fixed, oracle::fixed_under_rotation(xs, row.d));
  }
}

TEST(Csp, FourFamilies) {
  for (auto [a, b] : oracle::slopes_up_to(10)) {
    const Slope s(a, b);
    EXPECT_TRUE(csp_verify(catalan_instance(s)).ok) << a << "," << b;
    for (int k = 1; k <= a; ++k) EXPECT_TRUE(csp_verify(narayana_instance(s, k)).ok) << a << "," << b << " k=" << k;
    for (const auto& r : kreweras_vectors(a)) EXPECT_TRUE(csp_verify(kreweras_instance(s, r)).ok) << a << "," << b;
    if (a + b <= 12) EXPECT_TRUE(csp_verify(homogeneous_instance(s)).ok) << a << "," << b;
  }
}

TEST(Csp, EvaluationMatchesSymmetricCount) {
  for (auto [a, b] : oracle::slopes_up_to(13)) {
    for (int d = 1; d < b - 1; ++d) {
      if ((b - 1) % d) continue;
      const SymmetricContext ctx(Slope(a, b), d);
      EXPECT_EQ(eval_at_primitive_root(q_catalan(Slope(a, b)), (b - 1) / d), count_symmetric_catalan(ctx));
    }
  }
}
