#pragma once

#include <span>

#include <gmpxx.h>

#include "ratcat/lattice_paths.hpp"
#include "ratcat/qpolynomial.hpp"

namespace ratcat {

QPolynomial q_int(int n);
QPolynomial q_factorial(int n);
// By exact division of q-factorials.
QPolynomial q_binomial(int n, int k);
// By the q-Pascal recurrence; an independent route to the same polynomial.
QPolynomial q_binomial_pascal(int n, int k);

// The three families below throw DivisionRemainder or NegativeCoefficient if
// a quotient fails to be a polynomial with nonnegative coefficients.
QPolynomial q_catalan(const Slope& slope);
QPolynomial q_narayana(const Slope& slope, int k);
QPolynomial q_kreweras(const Slope& slope, std::span<const int> r);

QPolynomial cyclotomic(int k);

// P at a primitive k-th root of unity, via the residue mod Phi_k. Throws
// NonIntegerValue when the residue is not constant.
mpz_class eval_at_primitive_root(const QPolynomial& p, int k);

}  // namespace ratcat
