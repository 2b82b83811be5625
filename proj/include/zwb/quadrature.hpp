#pragma once

// Deterministic double-exponential quadrature for the integral classes met
// here: finite panels with endpoint log-power singularities, and [a, inf)
// integrals with either exponential (Bose/Fermi kernel) or algebraic decay.

#include "zwb/precision.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace zwb::quad {

using Integrand = std::function<ExtReal(const ExtReal&)>;

// f(x, b - x): the second argument is the distance to the right endpoint,
// computed without cancellation. Used for integrands singular at x = b.
using ComplementIntegrand = std::function<ExtReal(const ExtReal&, const ExtReal&)>;

enum class Decay { exponential, algebraic };

struct Domain {
  enum class Kind { finite, semi_infinite };

  Kind kind = Kind::finite;
  ExtReal a{0};
  ExtReal b{1};
  // Strength k of a log^k singularity at the left endpoint (informational;
  // the tanh-sinh rule absorbs it either way).
  int left_log_power = 0;
  Decay decay = Decay::algebraic;
  double decay_power = 2.0;

  static Domain finite(ExtReal a, ExtReal b, int left_log_power = 0);
  static Domain semi_infinite(ExtReal a, Decay decay, double decay_power = 2.0);

  // Throws ArgumentError for a >= b (finite), a < 0 (semi-infinite) or
  // algebraic decay with power <= 1.
  void validate() const;
};

struct QuadResult {
  ExtReal value{0};
  ExtReal err_estimate{0};
  std::size_t evaluations = 0;
  bool converged = false;

  QuadResult& operator+=(const QuadResult& other);
};

class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(const std::string& what, ExtReal location)
      : std::runtime_error(what), location_(std::move(location)) {}
  const ExtReal& location() const { return location_; }

 private:
  ExtReal location_;
};

inline constexpr int kLevelCap = 12;

QuadResult integrate(const Integrand& f, const Domain& d, const ExtReal& tol);
QuadResult integrate(const ComplementIntegrand& f, const Domain& d, const ExtReal& tol);

// Large-u behaviour f(u) ~ sum_j coeffs[j] * u^{-(j + shift)}, used to
// complete a tail analytically beyond `cutoff`.
struct AsymptoticTail {
  ExtReal shift{0};
  std::vector<ExtReal> coeffs;
  ExtReal cutoff{1000000};

  // Integral of sum_j c_j u^{-(j+shift)} log^k u over [cutoff, inf).
  ExtReal integrate_tail(int k) const;
};

// Re-expands sum_n c[n] x^{-n} with x = t + offset as a series in t^{-1},
// keeping `terms` coefficients.
std::vector<ExtReal> shift_inverse_powers(const std::vector<ExtReal>& c, const ExtReal& offset,
                                          std::size_t terms);

// Integral of f(u) log^k u over (0, inf). The interval is split at 1; the
// tail is mapped by u -> 1/t. When the mapped tail misses `tol` and a tail
// model is supplied, the range beyond tail->cutoff is completed analytically.
QuadResult integrate_with_log_weight(const Integrand& f, int k, const ExtReal& tol,
                                     const std::optional<AsymptoticTail>& tail = std::nullopt);

struct AlgebraicPair {
  QuadResult plain;
  QuadResult logged;
};

// (int u^{-s}/(x^2+u^2) du, int u^{-s} log u/(x^2+u^2) du) over (0, inf), |s| < 1, x > 0.
AlgebraicPair log_weighted_algebraic(const ExtReal& s, const ExtReal& x, const ExtReal& tol);

// Integrand evaluations performed by the calling thread since it started.
// Callers that cache integrals re-charge the cached count on reuse so the
// tally does not depend on cache state.
std::size_t evaluation_count();
void charge_evaluations(std::size_t n);

// Default absolute tolerance used by library-level integrals.
ExtReal default_tol();

}  // namespace zwb::quad
