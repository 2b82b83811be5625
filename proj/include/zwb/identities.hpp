#pragma once

// Kernels A, B, DB, the auxiliary functions J, K, H, I, integral
// representations of zeta and Hurwitz-zeta derivatives, and the series
// S = sum log(n+1)/(n(n+1)) by several independent routes.

#include "zwb/estimate.hpp"
#include "zwb/precision.hpp"
#include "zwb/quadrature.hpp"

#include <string>
#include <vector>

namespace zwb::ident {

// A(u)  = log u - psi(1+u) + 1/(2(1+u))
// B(u)  = psi'(1+u) - 1/(1+u)
// DB(u) = log(1+u) - psi(1+u)
enum class Kernel { A, B, DB };

std::string to_string(Kernel k);

// Above the asymptotic switch the differences are summed from their series.
ExtReal kernel_eval(Kernel k, const ExtReal& u);

// Coefficients c_j of the large-u expansion sum_j c_j u^{-j}.
std::vector<ExtReal> kernel_series(Kernel k, std::size_t terms);

// Integral of K(u) log^power u over (0, inf). Cached per precision and tol;
// cache hits re-charge the original evaluation count.
quad::QuadResult kernel_moment(Kernel k, int power, const ExtReal& tol = quad::default_tol());
Estimate kernel_moment_estimate(Kernel k, int power, const ExtReal& tol = quad::default_tol());

// Integral of K(u) u^{-s} log^power u over (0, inf).
quad::QuadResult kernel_power_moment(Kernel k, const ExtReal& s, int power,
                                     const ExtReal& tol = quad::default_tol());

// zeta(s) from the integral of B(u) u^{1-s}; 0 < s < 2, s != 1.
ExtReal zeta_debruijn(const ExtReal& s, const ExtReal& tol = quad::default_tol());
// zeta(s) from the integral of (log u - psi(1+u)) u^{-s}; 0 < s < 1.
ExtReal zeta_kloosterman(const ExtReal& s, const ExtReal& tol = quad::default_tol());
// zeta(s) = 1/(s-1) + sin(pi s)/pi * integral of DB(u) u^{-s}; 0 < s < 1.
ExtReal zeta_shifted_log(const ExtReal& s, const ExtReal& tol = quad::default_tol());

// n-th derivative of zeta at s in [0, 1) from the A-kernel integrals
// (1/pi) sum_k C(n,k) pi^k sin(pi s + k pi/2) int A (-log u)^{n-k} u^{-s}.
// For s = 0 the cached moments are used.
Estimate zeta_deriv_from_kernel(int n, const ExtReal& s, const ExtReal& tol = quad::default_tol());

// K(u) = int arctan(x/u) / (e^{2 pi x} - 1) dx
// J(u) = int log(u^2+x^2) arctan(x/u) / (e^{2 pi x} - 1) dx
// H(u) = int log(u^2+x^2) arctan(x/u) / (e^{pi x} + 1) dx
// I(u) = int_0^inf [psi(t+u) - log(t+u) + 1/(2(t+u))] dt
enum class Named { J, K, H, I };

std::string to_string(Named f);
ExtReal named_function_eval(Named f, const ExtReal& u, const ExtReal& tol = quad::default_tol());

// Closed forms through log Gamma (Stirling series).
ExtReal K_closed(const ExtReal& u);
ExtReal I_closed(const ExtReal& u);

// -int_0^inf [psi(t+u) - log(t+u) + 1/(2(t+u))] log t dt, which equals J(u).
ExtReal J_digamma(const ExtReal& u, const ExtReal& tol = quad::default_tol());

// d/ds zeta(s, u) at s = 0 from the arctan integral.
ExtReal hurwitz_d1_at0(const ExtReal& u, const ExtReal& tol = quad::default_tol());
// d^2/ds^2 zeta(s, u) at s = 0: Bose-integral route and digamma-integral route.
ExtReal hurwitz_d2_at0_bose(const ExtReal& u, const ExtReal& tol = quad::default_tol());
ExtReal hurwitz_d2_at0_digamma(const ExtReal& u, const ExtReal& tol = quad::default_tol());

// Generalized Stieltjes constant gamma_1(u):
//   trigamma route:  -1/2 log^2 u + int [psi'(t+u) - 1/(t+u)] log t dt
//   remainder route: log u/(2u) - 1/2 log^2 u + int [psi'(t+u) - 1/(t+u) - 1/(2(t+u)^2)] log t dt
//   Bose route:      log u/(2u) - 1/2 log^2 u + int x log(u^2+x^2)/((u^2+x^2)(e^{2 pi x}-1))
//                    - 2u int arctan(x/u)/((u^2+x^2)(e^{2 pi x}-1))
ExtReal gamma1_u_trigamma(const ExtReal& u, const ExtReal& tol = quad::default_tol());
ExtReal gamma1_u_remainder(const ExtReal& u, const ExtReal& tol = quad::default_tol());
ExtReal gamma1_u_bose(const ExtReal& u, const ExtReal& tol = quad::default_tol());

// Throws ConvergenceError when a quadrature misses its tolerance.
ExtReal converged_value(const quad::QuadResult& r, const char* what);

struct CohenRoute {
  std::string name;
  ExtReal value;
};

struct CohenResult {
  ExtReal value;                    // direct summation route
  std::vector<CohenRoute> routes;   // every route, direct first
  ExtReal max_spread;               // largest pairwise difference
};

// sum_{n=1}^{N} log(n+1)/(n(n+1))
ExtReal cohen_partial_sum(long terms);

// All routes, no agreement check.
CohenResult cohen_series_routes(const ExtReal& tol);

// Direct route; throws ConvergenceError naming the first pair that differs by more than tol.
ExtReal cohen_series(const ExtReal& tol);

// Central-difference zeta'(n) used by the -sum zeta'(n) route.
ExtReal zeta_prime_fd(const ExtReal& s, const ExtReal& h);

}  // namespace zwb::ident
