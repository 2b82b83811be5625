#pragma once

// Extended-precision digamma/polygamma, Riemann and Hurwitz zeta, log-gamma
// and the Stieltjes-constant oracle. Large-argument paths evaluate
// differences such as psi(x) - log x directly from their asymptotic series.

#include "zwb/precision.hpp"
#include "zwb/quadrature.hpp"

#include <cstddef>
#include <vector>

namespace zwb::specfun {

// Exact Bernoulli number B_n (B_1 = -1/2).
const Rational& bernoulli(unsigned n);

// B_0, B_2, B_4, ... as ExtReal at the current precision; at least `count` entries.
const std::vector<ExtReal>& bernoulli_even(std::size_t count);

ExtReal digamma(const ExtReal& u);
ExtReal polygamma(int r, const ExtReal& u);

// psi(x) - log x + 1/(2x); O(x^-2) for large x.
ExtReal digamma_remainder(const ExtReal& x);
// psi'(x) - 1/x - 1/(2x^2); O(x^-3) for large x.
ExtReal trigamma_remainder(const ExtReal& x);
// psi'(x) - 1/x
ExtReal trigamma_minus_inverse(const ExtReal& x);

// Coefficients c_n of the large-x expansions sum_n c_n x^{-n}.
std::vector<ExtReal> digamma_remainder_series(std::size_t terms);
std::vector<ExtReal> trigamma_remainder_series(std::size_t terms);

// log Gamma(u) by recurrence and the Stirling series (independent of Binet's integral).
ExtReal log_gamma_stirling(const ExtReal& u);

// 1/(e^y - 1) and 1/(e^y + 1) for y > 0, without overflow for large y.
ExtReal bose(const ExtReal& y);
ExtReal fermi(const ExtReal& y);
// 1/(e^y - 1) - 1/y, series near 0.
ExtReal bose_regular(const ExtReal& y);

// Euler-Maclaurin evaluation; valid for every real s != 1.
ExtReal zeta_em(const ExtReal& s);
ExtReal hurwitz_em(const ExtReal& s, const ExtReal& u);

// zeta(s, u) by Hermite's integral.
ExtReal hurwitz_hermite(const ExtReal& s, const ExtReal& u, const ExtReal& tol = quad::default_tol());
quad::QuadResult hurwitz_hermite_integral(const ExtReal& s, const ExtReal& u, const ExtReal& tol);

// log Gamma(u) by Binet's second formula.
ExtReal log_gamma_binet(const ExtReal& u, const ExtReal& tol = quad::default_tol());

inline constexpr int kStieltjesMax = 12;
inline constexpr long kStieltjesTerms = 10000;

// gamma_n from the limit definition with Euler-Maclaurin completion at N terms.
ExtReal stieltjes_oracle_at(int n, long terms);
// gamma_n at the default N (cached for n <= 12).
ExtReal stieltjes_oracle(int n);
// |gamma_n(N) - gamma_n(2N)|.
ExtReal stieltjes_oracle_err(int n);

// Euler's constant as gamma_0 from the oracle.
ExtReal euler_gamma();

}  // namespace zwb::specfun
