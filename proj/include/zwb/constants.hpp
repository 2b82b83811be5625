#pragma once

// Stieltjes constants, the eta/sigma/Lehmer/d sequences and zeta^(n)(0) by
// several independent routes, plus the sign and inequality checks that tie
// the sequences together.

#include "zwb/estimate.hpp"
#include "zwb/precision.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zwb::constants {

enum class Tag { stieltjes, eta, sigma, lehmer_b, d_n, zeta_deriv0 };

enum class StieltjesRoute { oracle, bell_2_3, leibniz_2_13, inversion_2_5 };

enum class ZetaRoute { integral_1_8, bell_1_16, leibniz_1_16_1, functional_4_1, lehmer_4_19, recurrence_4_24 };

inline constexpr int kIntegralMax = 8;
inline constexpr int kSequenceMax = 10;

std::string to_string(Tag t);
std::string to_string(StieltjesRoute r);
std::string to_string(ZetaRoute r);
std::optional<Tag> parse_tag(const std::string& s);
std::optional<StieltjesRoute> parse_stieltjes_route(const std::string& s);
std::optional<ZetaRoute> parse_zeta_route(const std::string& s);
const std::vector<StieltjesRoute>& all_stieltjes_routes();
const std::vector<ZetaRoute>& all_zeta_routes();

// g^(i)(0) for g = lambda'/lambda:  g(0) = -(gamma + log 2 pi),
// g^(i)(0) = [2^{-(i+1)}((-1)^{i+1} + 1) - 1] i! zeta(i+1).
ExtReal g_deriv0(int i);

// f(s) = s zeta(1-s):  f(0) = -1, f^(k)(0) = k gamma_{k-1}.
Estimate f_deriv0(int k);

Estimate stieltjes(int n, StieltjesRoute route);
Estimate zeta_deriv0(int n, ZetaRoute route);

// eta_n by Bell inversion of (-1)^m (m+1) gamma_m.
Estimate eta(int n);

// sigma_n from eta_{n-1}; sigma_1 = 1 + gamma/2 - log(4 pi)/2.
Estimate sigma_from_eta(int n);
// sigma_n = -b_{n-1} - (-1)^n zeta(n)/2^n with b from the Bell inversion of zeta derivatives.
Estimate sigma_from_lehmer(int n);
// Whichever of the two has the smaller propagated error.
Estimate sigma(int n);

// b_n from sigma_{n+1}; b_0 = log 2 pi - 1.
Estimate lehmer_b(int n);
// b_n by inverting 2[m zeta^(m-1)(0) - zeta^(m)(0)] = Y_m(0! b_0, ..., (m-1)! b_{m-1}).
Estimate lehmer_b_inversion(int n);

// d_n = {(-1)^n - 2^{-n}[(-1)^n + 1]} zeta(n) - eta_{n-1}
Estimate d_n_display(int n);
// d_n = (-1)^n (1 + b_{n-1}), b from the inversion route
Estimate d_n_lehmer(int n);
Estimate d_n(int n);

// gamma_1(u) by the trigamma integral; the Bose-integral form is the cross-check.
ExtReal gamma1_of_u(const ExtReal& u);
ExtReal gamma1_of_u_choi(const ExtReal& u);

// n-th derivative at x0 by a 9-point central stencil with step h.
// `at_x0` replaces f(x0) where f itself is singular or indeterminate there.
ExtReal central_derivative(const std::function<ExtReal(const ExtReal&)>& f, const ExtReal& x0, int n,
                           const ExtReal& h, const std::optional<ExtReal>& at_x0 = std::nullopt);

inline const char* kFdStep = "1e-8";

// d^n/ds^n [(s-1) zeta(s)] at s = 1 and d^k/ds^k [s zeta(1-s)] at s = 0.
ExtReal laurent_derivative_fd(int n, const ExtReal& h);
ExtReal f_series_fd(int k, const ExtReal& h);

struct Entry {
  int index;
  ExtReal value;
  std::string route;
  ExtReal err_estimate;
};

struct ConstantSequence {
  Tag tag;
  std::vector<Entry> entries;
};

// Entries for indices n0..n1. `route` selects one route, "all" lists every
// route per index, and an empty string picks the default.
ConstantSequence sequence(Tag tag, int n0, int n1, const std::string& route = "");

struct StructureCheck {
  std::string id;
  std::string description;
  ExtReal lhs;   // value at the tightest index (or the smallest margin)
  ExtReal rhs;
  bool pass;
  std::string detail;
};

// Sign alternation of eta_n and b_n, the sigma and b inequalities, 1 > b_2n and
// the trend of zeta^(n)(0)/n! towards -1, for indices up to max_n.
std::vector<StructureCheck> check_structure(int max_n);

}  // namespace zwb::constants
