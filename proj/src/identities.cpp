#include "zwb/identities.hpp"

#include "zwb/bell.hpp"
#include "zwb/specfun.hpp"

#include <boost/math/special_functions/log1p.hpp>

#include <map>
#include <mutex>
#include <tuple>

namespace zwb::ident {

using quad::AsymptoticTail;
using quad::Decay;
using quad::Domain;
using quad::QuadResult;
using specfun::bose;
using specfun::digamma;
using specfun::digamma_remainder;
using specfun::fermi;

namespace {

constexpr std::size_t kSeriesTerms = 40;

void require_positive(const ExtReal& u, const char* who) {
  if (!(u > 0)) throw DomainError(std::string(who) + " requires a positive argument");
}

ExtReal log1p_ext(const ExtReal& x) { return boost::math::log1p(x); }

// Expansion of psi(x) - log x + 1/(2x), coefficients of x^{-j}.
std::vector<ExtReal> remainder_series() { return specfun::digamma_remainder_series(kSeriesTerms); }

AsymptoticTail make_tail(std::vector<ExtReal> coeffs, const ExtReal& shift) {
  AsymptoticTail tail;
  tail.coeffs = std::move(coeffs);
  tail.shift = shift;
  return tail;
}

// Series in x^{-1} about x = t + offset, re-expanded in t^{-1}.
AsymptoticTail shifted_tail(const std::vector<ExtReal>& in_x, const ExtReal& offset) {
  return make_tail(quad::shift_inverse_powers(in_x, offset, kSeriesTerms), ExtReal(0));
}

QuadResult bose_integral(const quad::Integrand& f, const ExtReal& tol) {
  return quad::integrate(f, Domain::semi_infinite(ExtReal(0), Decay::exponential), tol);
}

ExtReal sin_quarter_turns(int k) {
  switch (((k % 4) + 4) % 4) {
    case 1: return ExtReal(1);
    case 3: return ExtReal(-1);
    default: return ExtReal(0);
  }
}

}  // namespace

ExtReal converged_value(const QuadResult& r, const char* what) {
  if (!r.converged) {
    throw ConvergenceError(std::string(what) + ": quadrature did not converge (error estimate " +
                           to_decimal(r.err_estimate, 6) + ")");
  }
  return r.value;
}

std::string to_string(Kernel k) {
  switch (k) {
    case Kernel::A: return "A";
    case Kernel::B: return "B";
    case Kernel::DB: return "DB";
  }
  return "?";
}

ExtReal kernel_eval(Kernel k, const ExtReal& u) {
  require_positive(u, "kernel");
  const ExtReal sw = effective_switch();
  const ExtReal x = 1 + u;
  switch (k) {
    case Kernel::A:
      if (u >= sw) return -digamma_remainder(u) - 1 / (2 * u * x);
      return log(u) - digamma(x) + 1 / (2 * x);
    case Kernel::B:
      return specfun::trigamma_minus_inverse(x);
    case Kernel::DB:
      if (x >= sw) return -digamma_remainder(x) + 1 / (2 * x);
      return log1p_ext(u) - digamma(x);
  }
  throw ArgumentError("unknown kernel");
}

std::vector<ExtReal> kernel_series(Kernel k, std::size_t terms) {
  const std::vector<ExtReal> r = specfun::digamma_remainder_series(terms);
  std::vector<ExtReal> c(terms, ExtReal(0));
  switch (k) {
    case Kernel::A:
      // -R(u) - 1/(2u(1+u)),  1/(u(1+u)) = sum_{m>=2} (-1)^m u^{-m}
      for (std::size_t m = 2; m < terms; ++m) c[m] = -r[m] - ExtReal(m % 2 == 0 ? 1 : -1) / 2;
      return c;
    case Kernel::B: {
      // psi'(x) - 1/x = 1/(2x^2) + trigamma remainder, x = 1 + u
      std::vector<ExtReal> in_x = specfun::trigamma_remainder_series(terms);
      in_x[2] += ExtReal(1) / 2;
      return quad::shift_inverse_powers(in_x, ExtReal(1), terms);
    }
    case Kernel::DB: {
      // 1/(2x) - R(x), x = 1 + u
      std::vector<ExtReal> in_x(terms, ExtReal(0));
      for (std::size_t m = 0; m < terms; ++m) in_x[m] = -r[m];
      in_x[1] += ExtReal(1) / 2;
      return quad::shift_inverse_powers(in_x, ExtReal(1), terms);
    }
  }
  throw ArgumentError("unknown kernel");
}

QuadResult kernel_power_moment(Kernel k, const ExtReal& s, int power, const ExtReal& tol) {
  const AsymptoticTail tail = make_tail(kernel_series(k, kSeriesTerms), s);
  if (s == 0) return quad::integrate_with_log_weight([k](const ExtReal& u) { return kernel_eval(k, u); }, power, tol, tail);
  return quad::integrate_with_log_weight([k, &s](const ExtReal& u) { return kernel_eval(k, u) * pow(u, -s); },
                                         power, tol, tail);
}

QuadResult kernel_moment(Kernel k, int power, const ExtReal& tol) {
  using Key = std::tuple<int, int, int, ExtReal>;
  static std::mutex mutex;
  static std::map<Key, QuadResult> cache;
  const Key key{carried_digits(), static_cast<int>(k), power, tol};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      quad::charge_evaluations(it->second.evaluations);
      return it->second;
    }
  }
  QuadResult r = kernel_power_moment(k, ExtReal(0), power, tol);
  std::lock_guard lock(mutex);
  cache.emplace(key, r);
  return r;
}

Estimate kernel_moment_estimate(Kernel k, int power, const ExtReal& tol) {
  const QuadResult r = kernel_moment(k, power, tol);
  const std::string what = "kernel " + to_string(k) + " moment " + std::to_string(power);
  return {converged_value(r, what.c_str()), r.err_estimate};
}

ExtReal zeta_debruijn(const ExtReal& s, const ExtReal& tol) {
  if (!(s > 0 && s < 2)) throw DomainError("zeta_debruijn requires 0 < s < 2");
  if (s == 1) throw PoleError("zeta_debruijn: pole at s = 1");
  const ExtReal integral = converged_value(kernel_power_moment(Kernel::B, s - 1, 0, tol), "zeta_debruijn");
  return 1 / (s - 1) - sin(pi() * s) / (pi() * (s - 1)) * integral;
}

ExtReal zeta_kloosterman(const ExtReal& s, const ExtReal& tol) {
  if (!(s > 0 && s < 1)) throw PoleError("zeta_kloosterman requires 0 < s < 1");
  // log u - psi(1+u) = -1/(2u) - R(u)
  std::vector<ExtReal> c = remainder_series();
  for (auto& x : c) x = -x;
  c[1] = ExtReal(-1) / 2;
  const AsymptoticTail tail = make_tail(std::move(c), s);
  auto f = [&s](const ExtReal& u) {
    return (kernel_eval(Kernel::A, u) - 1 / (2 * (1 + u))) * pow(u, -s);
  };
  const ExtReal integral = converged_value(quad::integrate_with_log_weight(f, 0, tol, tail), "zeta_kloosterman");
  return sin(pi() * s) / pi() * integral;
}

ExtReal zeta_shifted_log(const ExtReal& s, const ExtReal& tol) {
  if (!(s > 0 && s < 1)) throw PoleError("zeta_shifted_log requires 0 < s < 1");
  const ExtReal integral = converged_value(kernel_power_moment(Kernel::DB, s, 0, tol), "zeta_shifted_log");
  return 1 / (s - 1) + sin(pi() * s) / pi() * integral;
}

Estimate zeta_deriv_from_kernel(int n, const ExtReal& s, const ExtReal& tol) {
  if (n < 0) throw ArgumentError("derivative order must be non-negative");
  if (!(s >= 0 && s < 1)) throw DomainError("kernel derivative route requires 0 <= s < 1");
  const bool at_zero = s == 0;
  auto moment = [&](int j) -> Estimate {
    if (at_zero) return kernel_moment_estimate(Kernel::A, j, tol);
    const QuadResult r = kernel_power_moment(Kernel::A, s, j, tol);
    return {converged_value(r, "kernel A weighted moment"), r.err_estimate};
  };
  const ExtReal p = pi();
  const ExtReal sp = sin(p * s);
  const ExtReal cp = cos(p * s);
  // d^k/ds^k sin(pi s) = pi^k sin(pi s + k pi/2)
  auto shifted_sin = [&](int k) -> ExtReal {
    if (at_zero) return sin_quarter_turns(k);
    switch (k % 4) {
      case 0: return sp;
      case 1: return cp;
      case 2: return -sp;
      default: return -cp;
    }
  };
  if (n == 0) return Estimate::exact(ExtReal(-1) / 2) + (sp / p) * moment(0);
  Estimate total = Estimate::exact(ExtReal(0));
  for (int k = 0; k <= n; ++k) {
    const ExtReal factor = shifted_sin(k);
    if (factor == 0) continue;
    const int j = n - k;
    const ExtReal coeff = ExtReal(bell::binomial(n, k)) * pow(p, k - 1) * factor * (j % 2 == 0 ? 1 : -1);
    total = total + coeff * moment(j);
  }
  return total;
}

std::string to_string(Named f) {
  switch (f) {
    case Named::J: return "J";
    case Named::K: return "K";
    case Named::H: return "H";
    case Named::I: return "I";
  }
  return "?";
}

ExtReal named_function_eval(Named f, const ExtReal& u, const ExtReal& tol) {
  require_positive(u, "named function");
  const ExtReal two_pi = 2 * pi();
  const ExtReal u2 = u * u;
  switch (f) {
    case Named::K:
      return converged_value(
          bose_integral([&](const ExtReal& x) { return atan(x / u) * bose(two_pi * x); }, tol), "K");
    case Named::J:
      return converged_value(
          bose_integral([&](const ExtReal& x) { return log(u2 + x * x) * atan(x / u) * bose(two_pi * x); }, tol),
          "J");
    case Named::H: {
      const ExtReal p = pi();
      return converged_value(
          bose_integral([&](const ExtReal& x) { return log(u2 + x * x) * atan(x / u) * fermi(p * x); }, tol), "H");
    }
    case Named::I: {
      const AsymptoticTail tail = shifted_tail(remainder_series(), u);
      return converged_value(
          quad::integrate_with_log_weight([&](const ExtReal& t) { return digamma_remainder(t + u); }, 0, tol, tail),
          "I");
    }
  }
  throw ArgumentError("unknown named function");
}

ExtReal K_closed(const ExtReal& u) {
  require_positive(u, "K");
  return (specfun::log_gamma_stirling(u) - (u - ExtReal(1) / 2) * log(u) + u - log_two_pi() / 2) / 2;
}

ExtReal I_closed(const ExtReal& u) {
  require_positive(u, "I");
  return (u - ExtReal(1) / 2) * log(u) - u + log_two_pi() / 2 - specfun::log_gamma_stirling(u);
}

ExtReal J_digamma(const ExtReal& u, const ExtReal& tol) {
  require_positive(u, "J");
  const AsymptoticTail tail = shifted_tail(remainder_series(), u);
  const QuadResult r =
      quad::integrate_with_log_weight([&](const ExtReal& t) { return digamma_remainder(t + u); }, 1, tol, tail);
  return -converged_value(r, "J via digamma");
}

ExtReal hurwitz_d1_at0(const ExtReal& u, const ExtReal& tol) {
  return (u - ExtReal(1) / 2) * log(u) - u + 2 * named_function_eval(Named::K, u, tol);
}

namespace {
ExtReal d2_prefix(const ExtReal& u) {
  const ExtReal l = log(u);
  return (ExtReal(1) / 2 - u) * l * l + 2 * u * l - 2 * u;
}
}  // namespace

ExtReal hurwitz_d2_at0_bose(const ExtReal& u, const ExtReal& tol) {
  return d2_prefix(u) - 2 * named_function_eval(Named::J, u, tol);
}

ExtReal hurwitz_d2_at0_digamma(const ExtReal& u, const ExtReal& tol) {
  return d2_prefix(u) - 2 * J_digamma(u, tol);
}

ExtReal gamma1_u_trigamma(const ExtReal& u, const ExtReal& tol) {
  require_positive(u, "gamma1");
  std::vector<ExtReal> in_x = specfun::trigamma_remainder_series(kSeriesTerms);
  in_x[2] += ExtReal(1) / 2;
  const AsymptoticTail tail = shifted_tail(in_x, u);
  const QuadResult r = quad::integrate_with_log_weight(
      [&](const ExtReal& t) { return specfun::trigamma_minus_inverse(t + u); }, 1, tol, tail);
  // int_0^inf log t/(t+u)^2 dt = log(u)/u, so the log u terms cancel
  const ExtReal l = log(u);
  return -l * l / 2 + converged_value(r, "gamma1 (trigamma route)");
}

ExtReal gamma1_u_remainder(const ExtReal& u, const ExtReal& tol) {
  require_positive(u, "gamma1");
  const AsymptoticTail tail = shifted_tail(specfun::trigamma_remainder_series(kSeriesTerms), u);
  const QuadResult r = quad::integrate_with_log_weight(
      [&](const ExtReal& t) { return specfun::trigamma_remainder(t + u); }, 1, tol, tail);
  const ExtReal l = log(u);
  return l / (2 * u) - l * l / 2 + converged_value(r, "gamma1 (remainder route)");
}

ExtReal gamma1_u_bose(const ExtReal& u, const ExtReal& tol) {
  require_positive(u, "gamma1");
  const ExtReal two_pi = 2 * pi();
  const ExtReal u2 = u * u;
  const QuadResult a = bose_integral(
      [&](const ExtReal& x) {
        const ExtReal q = u2 + x * x;
        return x * log(q) / q * bose(two_pi * x);
      },
      tol / 2);
  const QuadResult b = bose_integral(
      [&](const ExtReal& x) { return atan(x / u) / (u2 + x * x) * bose(two_pi * x); }, tol / 2);
  const ExtReal l = log(u);
  return l / (2 * u) - l * l / 2 + converged_value(a, "gamma1 (Bose route)") -
         2 * u * converged_value(b, "gamma1 (Bose route)");
}

// ---------------------------------------------------------------------------
// S = sum log(n+1)/(n(n+1))

namespace {

// Truncated Taylor polynomial in h about a fixed point.
struct Jet {
  std::vector<ExtReal> c;

  static Jet constant(const ExtReal& v, std::size_t order) {
    Jet j{std::vector<ExtReal>(order + 1, ExtReal(0))};
    j.c[0] = v;
    return j;
  }
  // 1/(a + h)
  static Jet reciprocal(const ExtReal& a, std::size_t order) {
    Jet j{std::vector<ExtReal>(order + 1)};
    ExtReal p = 1 / a;
    for (std::size_t i = 0; i <= order; ++i) {
      j.c[i] = p;
      p = -p / a;
    }
    return j;
  }
  // log(a + h)
  static Jet log_of(const ExtReal& a, std::size_t order) {
    Jet j = constant(log(a), order);
    ExtReal p = 1 / a;
    for (std::size_t i = 1; i <= order; ++i) {
      j.c[i] = (i % 2 == 1 ? p : ExtReal(-p)) / static_cast<long>(i);
      p /= a;
    }
    return j;
  }
  Jet operator*(const Jet& o) const {
    Jet r = constant(ExtReal(0), c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t k = 0; i + k < c.size(); ++k) r.c[i + k] += c[i] * o.c[k];
    }
    return r;
  }
  Jet operator-(const Jet& o) const {
    Jet r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
};

// sum_{n>N} f(n) = int_N^inf f - f(N)/2 - sum_j B_{2j}/(2j) * c_{2j-1},
// where c_r = f^{(r)}(N)/r! comes from the jet of f at N.
ExtReal em_tail(const ExtReal& integral, const Jet& jet, int corrections) {
  ExtReal total = integral - jet.c[0] / 2;
  for (int j = 1; j <= corrections; ++j) {
    total -= to_ext(specfun::bernoulli(static_cast<unsigned>(2 * j))) / (2 * j) * jet.c[2 * j - 1];
  }
  return total;
}

constexpr long kCohenTerms = 1000;

int em_corrections() { return std::max(precision().em_terms, 10); }

ExtReal cohen_direct() {
  const long n_max = kCohenTerms;
  const ExtReal big(n_max);
  const ExtReal eps = 1 / big;
  const int m = em_corrections();
  const std::size_t order = static_cast<std::size_t>(2 * m);
  // f(x) = log(x+1) / (x (x+1))
  const Jet f = Jet::log_of(big + 1, order) * Jet::reciprocal(big, order) * Jet::reciprocal(big + 1, order);
  // int_N^inf f = 1/2 log^2(1+e) - sum_m (-1)^m e^{m+1} (log e/(m+1) - 1/(m+1)^2), e = 1/N
  const ExtReal l1 = log1p_ext(eps);
  ExtReal integral = l1 * l1 / 2;
  const ExtReal le = log(eps);
  ExtReal p = eps;
  const ExtReal floor = eps_digits(10);
  for (long k = 0;; ++k) {
    const ExtReal q(k + 1);
    const ExtReal term = p * (le / q - 1 / (q * q));
    integral -= (k % 2 == 0) ? term : ExtReal(-term);
    if (abs(term) < floor) break;
    p *= eps;
  }
  return cohen_partial_sum(n_max) + em_tail(integral, f, m);
}

ExtReal cohen_alternating_zeta(const ExtReal& floor) {
  // sum (-1)^{n+1} zeta(n+1)/n = log 2 + sum (-1)^{n+1} (zeta(n+1) - 1)/n
  ExtReal total = log(ExtReal(2));
  for (long n = 1;; ++n) {
    check_deadline();
    const ExtReal term = specfun::hurwitz_em(ExtReal(n + 1), ExtReal(2)) / n;
    total += (n % 2 == 1) ? term : ExtReal(-term);
    if (term < floor) return total;
  }
}

ExtReal cohen_zeta_prime(const ExtReal& floor) {
  // -sum_{n>=2} zeta'(n); Richardson step h = 1e-10 and h/2
  const ExtReal h("1e-10");
  ExtReal total(0);
  for (long n = 2;; ++n) {
    check_deadline();
    const ExtReal s(n);
    const ExtReal d1 = zeta_prime_fd(s, h);
    const ExtReal d2 = zeta_prime_fd(s, h / 2);
    const ExtReal d = (4 * d2 - d1) / 3;
    total -= d;
    if (abs(d) < floor) return total;
  }
}

ExtReal cohen_log_ratio() {
  // sum (1/n) log(1 + 1/n), tail integral -Li2(-e) = sum (-1)^{m+1} e^m / m^2
  const long n_max = kCohenTerms;
  ExtReal head(0);
  for (long n = 1; n <= n_max; ++n) {
    const ExtReal x(n);
    head += log1p_ext(1 / x) / x;
  }
  const ExtReal big(n_max);
  const ExtReal eps = 1 / big;
  ExtReal integral(0);
  ExtReal p = eps;
  const ExtReal floor = eps_digits(10);
  for (long m = 1;; ++m) {
    const ExtReal term = p / (m * m);
    integral += (m % 2 == 1) ? term : ExtReal(-term);
    if (term < floor) break;
    p *= eps;
  }
  const int m = em_corrections();
  const std::size_t order = static_cast<std::size_t>(2 * m);
  // g(x) = (log(x+1) - log x) / x
  const Jet g = (Jet::log_of(big + 1, order) - Jet::log_of(big, order)) * Jet::reciprocal(big, order);
  return head + em_tail(integral, g, m);
}

ExtReal cohen_trigamma_integral(const ExtReal& tol) {
  const QuadResult r = quad::integrate(
      [](const ExtReal& u) { return -specfun::polygamma(1, 1 + u) * log(u); },
      Domain::finite(ExtReal(0), ExtReal(1), 1), tol);
  return converged_value(r, "S (trigamma integral)");
}

ExtReal cohen_log_integral(const ExtReal& tol) {
  // int_0^1 (1-x) log(1-x) / (x log x) dx; `rest` = 1 - x
  const QuadResult r = quad::integrate(
      [](const ExtReal& x, const ExtReal& rest) {
        const ExtReal log_x = x < ExtReal(1) / 2 ? log(x) : log1p_ext(-rest);
        return rest * log(rest) / (x * log_x);
      },
      Domain::finite(ExtReal(0), ExtReal(1)), tol);
  return converged_value(r, "S (log integral)");
}

}  // namespace

ExtReal zeta_prime_fd(const ExtReal& s, const ExtReal& h) {
  // zeta(s, 2) = zeta(s) - 1 keeps the constant out of the difference
  const ExtReal two(2);
  return (specfun::hurwitz_em(s + h, two) - specfun::hurwitz_em(s - h, two)) / (2 * h);
}

ExtReal cohen_partial_sum(long terms) {
  if (terms < 0) throw ArgumentError("term count must be non-negative");
  ExtReal total(0);
  for (long n = 1; n <= terms; ++n) {
    const ExtReal x(n);
    total += log(x + 1) / (x * (x + 1));
  }
  return total;
}

CohenResult cohen_series_routes(const ExtReal& tol) {
  if (!(tol >= ExtReal("1e-25"))) throw ArgumentError("cohen_series requires tol >= 1e-25");
  using Key = std::pair<int, ExtReal>;
  static std::mutex mutex;
  static std::map<Key, std::pair<CohenResult, std::size_t>> cache;
  const Key key{carried_digits(), tol};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      quad::charge_evaluations(it->second.second);
      return it->second.first;
    }
  }
  const std::size_t before = quad::evaluation_count();
  const ExtReal floor = eps_digits(8);
  const ExtReal quad_tol = std::min(quad::default_tol(), tol / 100);
  CohenResult out;
  out.routes = {
      {"direct", cohen_direct()},
      {"alternating_zeta", cohen_alternating_zeta(floor)},
      {"zeta_prime_sum", cohen_zeta_prime(floor)},
      {"log_ratio_sum", cohen_log_ratio()},
      {"trigamma_integral", cohen_trigamma_integral(quad_tol)},
      {"log_integral", cohen_log_integral(quad_tol)},
  };
  out.value = out.routes.front().value;
  out.max_spread = ExtReal(0);
  for (std::size_t i = 0; i < out.routes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.routes.size(); ++j) {
      out.max_spread = std::max(out.max_spread, ExtReal(abs(out.routes[i].value - out.routes[j].value)));
    }
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, std::make_pair(out, quad::evaluation_count() - before));
  return out;
}

ExtReal cohen_series(const ExtReal& tol) {
  const CohenResult r = cohen_series_routes(tol);
  for (std::size_t i = 0; i < r.routes.size(); ++i) {
    for (std::size_t j = i + 1; j < r.routes.size(); ++j) {
      const ExtReal d = abs(r.routes[i].value - r.routes[j].value);
      if (d > tol) {
        throw ConvergenceError("S routes disagree: " + r.routes[i].name + " vs " + r.routes[j].name + " differ by " +
                               to_decimal(d, 6));
      }
    }
  }
  return r.value;
}

}  // namespace zwb::ident
