#include "zwb/catalog.hpp"

#include "zwb/bell.hpp"
#include "zwb/constants.hpp"
#include "zwb/identities.hpp"
#include "zwb/quadrature.hpp"
#include "zwb/specfun.hpp"

#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace zwb::catalog {

using constants::StieltjesRoute;
using constants::ZetaRoute;
using ident::converged_value;
using ident::Kernel;
using ident::Named;
using quad::Decay;
using quad::Domain;
using specfun::bose;
using specfun::fermi;

namespace {

using Eqs = std::vector<Equation>;

// ---------------------------------------------------------------- helpers

std::string short_decimal(const ExtReal& x) {
  std::ostringstream os;
  os << std::setprecision(6) << x.convert_to<double>();
  return os.str();
}

std::string point_label(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ", ";
    out += k + "=" + short_decimal(v);
  }
  return out;
}

const ExtReal& get(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw ArgumentError("missing parameter " + name);
  return it->second;
}

int get_int(const Params& p, const std::string& name) { return get(p, name).convert_to<int>(); }

ParamSpec real_param(std::string name, std::optional<ExtReal> lo, std::optional<ExtReal> hi, std::string meaning,
                     std::vector<ExtReal> excluded = {}) {
  ParamSpec s;
  s.name = std::move(name);
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  s.excluded = std::move(excluded);
  s.meaning = std::move(meaning);
  return s;
}

ParamSpec int_param(std::string name, int lo, int hi, std::string meaning) {
  ParamSpec s;
  s.name = std::move(name);
  s.integer = true;
  s.lo = ExtReal(lo);
  s.hi = ExtReal(hi);
  s.lo_closed = s.hi_closed = true;
  s.meaning = std::move(meaning);
  return s;
}

ParamSpec positive(std::string name, std::string meaning) {
  return real_param(std::move(name), ExtReal(0), std::nullopt, std::move(meaning));
}

std::vector<Params> grid(const std::string& name, const std::vector<const char*>& values) {
  std::vector<Params> out;
  for (const char* v : values) out.push_back({{name, ExtReal(v)}});
  return out;
}

std::vector<Params> int_grid(const std::string& name, int lo, int hi) {
  std::vector<Params> out;
  for (int n = lo; n <= hi; ++n) out.push_back({{name, ExtReal(n)}});
  return out;
}

std::vector<Params> product(const std::string& a, const std::vector<const char*>& av, const std::string& b,
                            const std::vector<const char*>& bv) {
  std::vector<Params> out;
  for (const char* x : av) {
    for (const char* y : bv) out.push_back({{a, ExtReal(x)}, {b, ExtReal(y)}});
  }
  return out;
}

ExtReal value(const quad::QuadResult& r, const char* what) { return converged_value(r, what); }

ExtReal bose_integral(const quad::Integrand& f, const ExtReal& tol, const char* what) {
  return value(quad::integrate(f, Domain::semi_infinite(ExtReal(0), Decay::exponential), tol), what);
}

ExtReal zeta(int m) { return specfun::zeta_em(ExtReal(m)); }
ExtReal gamma_n(int n) { return specfun::stieltjes_oracle(n); }
ExtReal euler() { return specfun::euler_gamma(); }
ExtReal sign(int n) { return ExtReal(n % 2 == 0 ? 1 : -1); }
ExtReal binom(int n, int k) { return ExtReal(bell::binomial(n, k)); }
ExtReal fact(int n) { return ExtReal(bell::factorial(n)); }

ExtReal bell_y(const std::vector<ExtReal>& x, int n) {
  return bell::complete_recurrence(bell::BellInput<ExtReal>(x), static_cast<unsigned>(n));
}

ExtReal moment(Kernel k, int j, const ExtReal& tol) { return ident::kernel_moment_estimate(k, j, tol).value; }

ExtReal zeta_fe(int n) { return constants::zeta_deriv0(n, ZetaRoute::functional_4_1).value; }

// zeta''(0) from gamma, gamma_1, zeta(2) and log 2 pi
ExtReal zeta2_closed() {
  const ExtReal g = euler();
  const ExtReal l = log_two_pi();
  return gamma_n(1) + g * g / 2 - zeta(2) / 4 - l * l / 2;
}

// gamma_1(u) for positive integers and half-integers, by stepping
// gamma_1(u+1) = gamma_1(u) - log(u)/u up from u = 1 or u = 1/2.
std::string half_integer_only(const Params& p) {
  const ExtReal twice = 2 * get(p, "u");
  return twice == floor(twice) ? "" : "u must be a positive integer or half-integer";
}

ExtReal gamma1_closed(const ExtReal& u) {
  const ExtReal l2 = log(ExtReal(2));
  const bool half = u != floor(u);
  ExtReal v = half ? ExtReal(1) / 2 : ExtReal(1);
  ExtReal g = half ? gamma_n(1) - l2 * l2 - 2 * euler() * l2 : gamma_n(1);
  while (v < u) {
    g -= log(v) / v;
    v += 1;
  }
  return g;
}

// 9-point derivative of a function sampled once per node.
ExtReal sampled_derivative(const std::function<ExtReal(const ExtReal&)>& f, const ExtReal& x0, int n,
                           const ExtReal& h) {
  return constants::central_derivative(f, x0, n, h);
}

// Expansion of psi'(x) - 1/x in powers of 1/x, as a tail model about t = 0 with x = t + u.
quad::AsymptoticTail trigamma_tail(const ExtReal& u) {
  std::vector<ExtReal> in_x = specfun::trigamma_remainder_series(40);
  in_x[2] += ExtReal(1) / 2;
  quad::AsymptoticTail tail;
  tail.coeffs = quad::shift_inverse_powers(in_x, u, 40);
  return tail;
}

// Fixed tolerance so every record shares one cached evaluation.
ident::CohenResult cohen_routes() { return ident::cohen_series_routes(ExtReal("1e-25")); }

ExtReal cohen_route(const std::string& name) {
  const auto all = cohen_routes();
  for (const auto& r : all.routes) {
    if (r.name == name) return r.value;
  }
  throw ArgumentError("no S route named " + name);
}

// Y_k arguments 0, 2*1!zeta(2), 0, 2*3!zeta(4), ... shared by several Bell forms.
std::vector<ExtReal> even_zeta_args(int n) {
  std::vector<ExtReal> x;
  for (int m = 1; m <= n; ++m) x.push_back(m % 2 == 1 ? ExtReal(0) : 2 * fact(m - 1) * zeta(m));
  return x;
}

// ---------------------------------------------------------------- records

std::vector<IdentityRecord> build() {
  std::vector<IdentityRecord> v;
  auto add = [&v](IdentityRecord r) { v.push_back(std::move(r)); };
  const ParamSpec s_strip = real_param("s", ExtReal(0), ExtReal(1), "real part of the zeta argument, 0 < s < 1");

  // zeta on the critical strip
  add({"EQ_1_1", "zeta(s) as sin(pi s)/pi times the integral of (log u - psi(1+u)) u^-s, against Euler-Maclaurin zeta",
       "Using Ramanujan's master theorem", {s_strip}, grid("s", {"0.25", "0.5"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& s = get(p, "s");
         return Eqs{{"integral vs zeta_em", ident::zeta_kloosterman(s, tol), specfun::zeta_em(s)}};
       }});

  add({"EQ_1_2", "integral of u^-s/(1+u) over (0, inf) equals pi/sin(pi s)", "the well-known integral", {s_strip},
       grid("s", {"0.5", "0.25"}), false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& s = get(p, "s");
         quad::AsymptoticTail tail;
         tail.shift = s;
         tail.coeffs.assign(30, ExtReal(0));
         for (std::size_t j = 1; j < tail.coeffs.size(); ++j) tail.coeffs[j] = sign(static_cast<int>(j) - 1);
         const ExtReal lhs = value(
             quad::integrate_with_log_weight([&](const ExtReal& u) { return pow(u, -s) / (1 + u); }, 0, tol, tail),
             "u^-s/(1+u)");
         return Eqs{{"integral vs pi/sin(pi s)", lhs, pi() / sin(pi() * s)}};
       }});

  add({"EQ_1_3", "zeta(s) = 1/(s-1) + sin(pi s)/pi times the integral of (log(1+u) - psi(1+u)) u^-s",
       "This integral was used by de Bruijn", {s_strip}, grid("s", {"0.25", "0.5"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& s = get(p, "s");
         return Eqs{{"integral vs zeta_em", ident::zeta_shifted_log(s, tol), specfun::zeta_em(s)}};
       }});

  add({"EQ_1_5_6", "zeta'(0) = -log(2 pi)/2 as the integral of kernel A", "previously obtained by Berndt and Dixit", {},
       {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         return Eqs{{"int A vs -log(2 pi)/2", moment(Kernel::A, 0, tol), -log_two_pi() / 2}};
       }});

  add({"EQ_1_7", "zeta^(n)(s) from log-weighted kernel A integrals, against finite differences of de Bruijn zeta",
       "More generally, using Leibniz's rule",
       {real_param("s", ExtReal("0.01"), ExtReal("0.99"), "point of differentiation"),
        int_param("n", 1, 4, "derivative order")},
       product("s", {"0.3", "0.5"}, "n", {"1", "2"}), false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& s = get(p, "s");
         const int n = get_int(p, "n");
         const ExtReal lhs = ident::zeta_deriv_from_kernel(n, s, tol).value;
         const ExtReal rhs = sampled_derivative([&](const ExtReal& x) { return ident::zeta_debruijn(x, tol); }, s, n,
                                                ExtReal("1e-3"));
         return Eqs{{"kernel sum vs finite difference", lhs, rhs}};
       }});

  add({"EQ_1_8", "zeta^(n)(0) from kernel A moments, against the functional-equation route",
       "More generally, using Leibniz's rule", {int_param("n", 0, constants::kIntegralMax, "derivative order")},
       int_grid("n", 1, 4), false, nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         return Eqs{{"integral vs functional equation", constants::zeta_deriv0(n, ZetaRoute::integral_1_8).value,
                     zeta_fe(n)}};
       }});

  add({"EQ_1_9", "zeta''(0) = -2 times the log-weighted integral of kernel A, against the closed form in gamma_1",
       "For example, we have for", {}, {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         return Eqs{{"integral vs closed form", -2 * moment(Kernel::A, 1, tol), zeta2_closed()}};
       }});

  add({"EQ_1_10", "closed form of zeta''(0) in gamma, gamma_1 and zeta(2), against the form in eta_1",
       "Ramanujan [6] showed that", {}, {Params{}}, false, nullptr, [](const Params&, const ExtReal&) {
         const ExtReal l = log_two_pi();
         const ExtReal eta_form = -l * l / 2 - zeta(2) / 4 + constants::eta(1).value / 2;
         return Eqs{{"gamma_1 form vs eta_1 form", zeta2_closed(), eta_form}};
       }});

  add({"EQ_1_13", "zeta'''(0) = 3 int A log^2 u + pi^2 log(2 pi)/2, against the functional-equation route",
       "and substituting (1.6) we have", {}, {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         const ExtReal lhs = 3 * moment(Kernel::A, 2, tol) + pi() * pi() / 2 * log_two_pi();
         return Eqs{{"integral vs functional equation", lhs, zeta_fe(3)}};
       }});

  add({"EQ_1_16", "zeta^(n)(0) as a Bell-polynomial sum of kernel A moments, against the functional-equation route",
       "We therefore conclude that", {int_param("n", 0, constants::kIntegralMax, "derivative order")},
       int_grid("n", 1, 6), true, nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         return Eqs{{"Bell sum vs functional equation", constants::zeta_deriv0(n, ZetaRoute::bell_1_16).value,
                     zeta_fe(n)}};
       }});

  add({"EQ_1_16_1", "Leibniz relation between zeta^(k)(0), Bell polynomials in even zeta values and kernel A moments",
       "the Leibniz rule gives us", {int_param("n", 1, constants::kIntegralMax, "derivative order")},
       int_grid("n", 1, 6), true, nullptr, [](const Params& p, const ExtReal& tol) {
         const int n = get_int(p, "n");
         const auto x = even_zeta_args(n);
         ExtReal lhs(0);
         for (int k = 0; k <= n - 1; ++k) lhs += binom(n, k) * zeta_fe(n - k) * bell_y(x, k);
         const ExtReal rhs = n * sign(n - 1) * moment(Kernel::A, n - 1, tol);
         return Eqs{{"Bell-weighted derivatives vs moment", lhs, rhs}};
       }});

  // algebraic integrals
  const ParamSpec s_sym = real_param("s", ExtReal(-1), ExtReal(1), "exponent, |s| < 1");
  const ParamSpec x_pos = positive("x", "scale x > 0");
  add({"EQ_1_18", "integral of u^-s/(x^2+u^2) equals pi/(2 x^(s+1) cos(pi s/2))",
       "We now designate $s = 2p - 1$", {s_sym, x_pos}, product("s", {"0", "0.5", "-0.5"}, "x", {"1", "2"}), false,
       nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& s = get(p, "s");
         const ExtReal& x = get(p, "x");
         const ExtReal lhs = value(quad::log_weighted_algebraic(s, x, tol).plain, "u^-s/(x^2+u^2)");
         return Eqs{{"integral vs closed form", lhs, pi() / (2 * pow(x, s + 1) * cos(pi() * s / 2))}};
       }});

  add({"EQ_1_20", "log u - psi(1+u) as twice the integral of x/(x^2+u^2) [1/(e^(2 pi x)-1) - 1/(2 pi x)]",
       "It may be noted that (1.19)", {positive("u", "argument")}, grid("u", {"0.5", "1", "2", "10"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal two_pi = 2 * pi();
         const ExtReal u2 = u * u;
         const ExtReal lhs = ident::kernel_eval(Kernel::A, u) - 1 / (2 * (1 + u));
         const ExtReal integral = value(
             quad::integrate([&](const ExtReal& x) { return x / (x * x + u2) * specfun::bose_regular(two_pi * x); },
                             Domain::semi_infinite(ExtReal(0), Decay::algebraic, 2.0), tol),
             "regularised Bose integral");
         return Eqs{{"digamma difference vs integral", lhs, 2 * integral}};
       }});

  add({"EQ_1_22",
       "integral of u^-s log u/(x^2+u^2) against the sign-corrected closed form "
       "(pi/2) x^-(s+1) [cos(pi s/2) log x - (pi/2) sin(pi s/2)]/cos^2(pi s/2)",
       "differentiation under the integral sign is valid", {s_sym, x_pos},
       product("s", {"0.5", "-0.5", "0.25"}, "x", {"1", "2"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& s = get(p, "s");
         const ExtReal& x = get(p, "x");
         const ExtReal lhs = value(quad::log_weighted_algebraic(s, x, tol).logged, "u^-s log u/(x^2+u^2)");
         const ExtReal c = cos(pi() * s / 2);
         const ExtReal sn = sin(pi() * s / 2);
         const ExtReal rhs = pi() / 2 * pow(x, -(s + 1)) * (c * log(x) - pi() / 2 * sn) / (c * c);
         return Eqs{{"integral vs closed form", lhs, rhs}};
       }});

  add({"EQ_1_23", "integral of log u/(x^2+u^2) equals pi log(x)/(2x)", "this is a particular case", {x_pos},
       std::vector<Params>{{{"x", ExtReal(2)}}, {{"x", exp(ExtReal(1))}}}, false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& x = get(p, "x");
         const ExtReal lhs = value(quad::log_weighted_algebraic(ExtReal(0), x, tol).logged, "log u/(x^2+u^2)");
         return Eqs{{"integral vs closed form", lhs, pi() * log(x) / (2 * x)}};
       }});

  // Stieltjes constants
  add({"EQ_2_1", "de Bruijn's representation of zeta(s) through kernel B, against Euler-Maclaurin zeta",
       "this corrects two misprints",
       {real_param("s", ExtReal(0), ExtReal(2), "argument, 0 < s < 2, s != 1", {ExtReal(1)})},
       grid("s", {"0.25", "0.5", "0.75", "1.5"}), false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& s = get(p, "s");
         return Eqs{{"integral vs zeta_em", ident::zeta_debruijn(s, tol), specfun::zeta_em(s)}};
       }});

  add({"EQ_2_2", "Euler's constant as the integral of kernel B", "in accordance with the well known limit", {},
       {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         return Eqs{{"int B vs gamma oracle", moment(Kernel::B, 0, tol), gamma_n(0)}};
       }});

  add({"EQ_2_3", "gamma_n as a Bell-polynomial sum of log-weighted kernel B integrals",
       "With $s=1$ we have", {int_param("n", 0, constants::kIntegralMax, "index")}, int_grid("n", 0, 6), true,
       nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         return Eqs{{"Bell sum vs oracle", constants::stieltjes(n, StieltjesRoute::bell_2_3).value, gamma_n(n)}};
       }});

  add({"EQ_2_4", "gamma_1 as the log-weighted integral of kernel B", "For example, with $n=1$ we obtain", {},
       {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         return Eqs{{"int B log u vs oracle", moment(Kernel::B, 1, tol), gamma_n(1)}};
       }});

  add({"EQ_2_5",
       "log-weighted kernel B integrals as binomial sums of Stieltjes constants, and gamma_n by solving that system",
       "Hence we obtain the integral", {int_param("n", 0, constants::kIntegralMax, "log power")}, int_grid("n", 0, 6),
       true, nullptr, [](const Params& p, const ExtReal& tol) {
         const int n = get_int(p, "n");
         const auto x = even_zeta_args(n);
         ExtReal rhs(0);
         for (int k = 0; k <= n; ++k) rhs += binom(n, k) * bell_y(x, k) * sign(k) * gamma_n(n - k);
         return Eqs{{"int B log^n vs gamma sum", moment(Kernel::B, n, tol), rhs},
                    {"triangular solve vs oracle", constants::stieltjes(n, StieltjesRoute::inversion_2_5).value,
                     gamma_n(n)}};
       }});

  add({"EQ_2_6", "integral over (1, inf) of (log u - log(1+u))/u equals -zeta(2)/2",
       "in terms of the polylogarithm function", {}, {Params{}}, false, nullptr,
       [](const Params&, const ExtReal& tol) {
         const ExtReal lhs =
             value(quad::integrate([](const ExtReal& u) { return -boost::math::log1p(1 / u) / u; },
                                   Domain::semi_infinite(ExtReal(1), Decay::algebraic, 2.0), tol),
                   "(log u - log(1+u))/u");
         return Eqs{{"integral vs -zeta(2)/2", lhs, -pi() * pi() / 12}};
       }});

  // (psi(1+u) + gamma)/u on (0, 1]; Taylor series where the difference cancels.
  auto psi_shift_over_u = [](const ExtReal& u) -> ExtReal {
    if (u < ExtReal("1e-8")) {
      ExtReal sum(0), power(1);
      for (int k = 2; k <= 8; ++k) {
        sum += sign(k) * zeta(k) * power;
        power *= u;
      }
      return sum;
    }
    return (specfun::digamma(1 + u) + euler()) / u;
  };
  auto head_integral = [psi_shift_over_u](const ExtReal& tol) {
    return value(quad::integrate(psi_shift_over_u, Domain::finite(ExtReal(0), ExtReal(1)), tol),
                 "(psi(1+u) + gamma)/u");
  };

  add({"EQ_2_7", "split integral of (psi(1+u) + gamma)/u and (psi(1+u) - log u)/u equals zeta(2) - gamma_1",
       "We showed in Eq.(3.35.1)", {}, {Params{}}, false, nullptr, [head_integral](const Params&, const ExtReal& tol) {
         const ExtReal tail = value(quad::integrate(
                                        [](const ExtReal& u) {
                                          const ExtReal d = specfun::digamma_remainder(1 + u) +
                                                            boost::math::log1p(1 / u) - 1 / (2 * (1 + u));
                                          return d / u;
                                        },
                                        Domain::semi_infinite(ExtReal(1), Decay::algebraic, 2.0), tol),
                                    "(psi(1+u) - log u)/u");
         return Eqs{{"split integral vs zeta(2) - gamma_1", head_integral(tol) + tail, zeta(2) - gamma_n(1)}};
       }});

  add({"EQ_2_8", "integral of (psi(1+u) + gamma)/u over (0, 1) equals S = sum log(n+1)/(n(n+1))",
       "it is known [24 , p.142] that", {}, {Params{}}, false, nullptr,
       [head_integral](const Params&, const ExtReal& tol) {
         return Eqs{{"integral vs S", head_integral(tol), cohen_routes().value}};
       }});

  add({"EQ_2_9_10", "log-weighted kernel B over (1, inf) and (0, 1) in terms of S, gamma_1 and zeta(2)",
       "Hence we have the integrals", {}, {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         auto f = [](const ExtReal& u) { return ident::kernel_eval(Kernel::B, u) * log(u); };
         const ExtReal upper = value(quad::integrate(f, Domain::semi_infinite(ExtReal(1), Decay::algebraic, 2.0), tol),
                                     "B log u on (1, inf)");
         const ExtReal lower = value(quad::integrate(f, Domain::finite(ExtReal(0), ExtReal(1), 1), tol),
                                     "B log u on (0, 1)");
         const ExtReal s = cohen_routes().value;
         return Eqs{{"upper part", upper, s + gamma_n(1) - zeta(2) / 2}, {"lower part", lower, zeta(2) / 2 - s}};
       }});

  add({"EQ_2_11_12", "integral of psi'(1+u) log u over (0, 1) equals -S and -sum (1/n) log((n+1)/n)",
       "whereupon we obtain the equivalent version", {}, {Params{}}, false, nullptr,
       [](const Params&, const ExtReal& tol) {
         const ExtReal lhs = value(
             quad::integrate([](const ExtReal& u) { return specfun::polygamma(1, 1 + u) * log(u); },
                             Domain::finite(ExtReal(0), ExtReal(1), 1), tol),
             "psi'(1+u) log u");
         return Eqs{{"integral vs -S", lhs, -cohen_routes().value},
                    {"integral vs log-ratio series", lhs, -cohen_route("log_ratio_sum")}};
       }});

  add({"COHEN_CHAIN", "every route to S = sum log(n+1)/(n(n+1)) agrees with every other",
       "Cohen [24, p.142] has also stated", {}, {Params{}}, false, nullptr, [](const Params&, const ExtReal&) {
         Eqs out;
         const auto all = cohen_routes();
         const auto& routes = all.routes;
         for (std::size_t i = 0; i < routes.size(); ++i) {
           for (std::size_t j = i + 1; j < routes.size(); ++j) {
             out.push_back({routes[i].name + " vs " + routes[j].name, routes[i].value, routes[j].value});
           }
         }
         return out;
       }});

  add({"EQ_2_13",
       "sign-corrected Leibniz form: (-1)^(n-1) n gamma_(n-1) as a sum of pi powers times kernel B moments",
       "it is not necessary to employ", {int_param("n", 1, constants::kIntegralMax, "derivative order")},
       int_grid("n", 1, 7), true, nullptr, [](const Params& p, const ExtReal& tol) {
         const int n = get_int(p, "n");
         ExtReal rhs(0);
         for (int j = 0; j <= n; ++j) {
           const int r = n - j;
           if (r % 2 == 0) continue;
           const ExtReal s = ExtReal(r % 4 == 1 ? 1 : -1);
           rhs += binom(n, j) * pow(pi(), r - 1) * s * sign(j) * moment(Kernel::B, j, tol);
         }
         return Eqs{{"oracle vs moment sum", sign(n - 1) * n * gamma_n(n - 1), rhs}};
       }});

  // Hurwitz zeta, log Gamma and the named functions
  const ParamSpec u_pos = positive("u", "shift u > 0");
  add({"EQ_3_3", "Hermite's integral for zeta(s, u), against Euler-Maclaurin Hurwitz zeta", "Hermite's integral for",
       {real_param("s", std::nullopt, std::nullopt, "argument, s != 1", {ExtReal(1)}), u_pos},
       std::vector<Params>{{{"s", ExtReal(2)}, {"u", ExtReal(1)}},
                           {{"s", ExtReal(2)}, {"u", ExtReal("0.5")}},
                           {{"s", ExtReal(3)}, {"u", ExtReal(2)}},
                           {{"s", ExtReal("0.5")}, {"u", ExtReal(2)}}},
       false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& s = get(p, "s");
         const ExtReal& u = get(p, "u");
         return Eqs{{"Hermite vs Euler-Maclaurin", specfun::hurwitz_hermite(s, u, tol), specfun::hurwitz_em(s, u)}};
       }});

  add({"EQ_3_5", "Binet's second formula for log Gamma(u), against the Stirling series", "Binet's second formula",
       {u_pos}, grid("u", {"0.5", "1", "2", "5"}), false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         return Eqs{{"Binet vs Stirling", specfun::log_gamma_binet(u, tol), specfun::log_gamma_stirling(u)}};
       }});

  add({"LERCH", "zeta'(0, u) from the arctan integral equals log Gamma(u) - log(2 pi)/2",
       "using Lerch's identity", {u_pos}, grid("u", {"0.5", "1", "2", "5"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal lhs = ident::hurwitz_d1_at0(u, tol);
         const ExtReal fd = sampled_derivative([&](const ExtReal& s) { return specfun::hurwitz_em(s, u); }, ExtReal(0),
                                               1, ExtReal("1e-3"));
         return Eqs{{"arctan integral vs log Gamma", lhs, specfun::log_gamma_stirling(u) - log_two_pi() / 2},
                    {"arctan integral vs finite difference", lhs, fd}};
       }});

  add({"EQ_3_6", "zeta''(0, u) through J(u), against finite differences of Euler-Maclaurin Hurwitz zeta",
       "where with $s = 0$ we have", {u_pos}, grid("u", {"0.5", "1", "2"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal fd = sampled_derivative([&](const ExtReal& s) { return specfun::hurwitz_em(s, u); }, ExtReal(0),
                                               2, ExtReal("1e-3"));
         return Eqs{{"Bose integral vs finite difference", ident::hurwitz_d2_at0_bose(u, tol), fd}};
       }});

  add({"EQ_3_7", "integral of log t/((t+u)^2 + x^2) equals log(u^2+x^2) arctan(x/u)/(2x)",
       "Using contour integration, Holland", {u_pos, x_pos},
       std::vector<Params>{{{"u", ExtReal(1)}, {"x", ExtReal(1)}},
                           {{"u", ExtReal(2)}, {"x", ExtReal("0.5")}},
                           {{"u", ExtReal("0.5")}, {"x", ExtReal(3)}}},
       false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal& x = get(p, "x");
         const ExtReal x2 = x * x;
         const ExtReal lhs = value(quad::integrate_with_log_weight(
                                       [&](const ExtReal& t) { return 1 / ((t + u) * (t + u) + x2); }, 1, tol),
                                   "log t/((t+u)^2+x^2)");
         return Eqs{{"integral vs closed form", lhs, log(u * u + x2) * atan(x / u) / (2 * x)}};
       }});

  add({"EQ_3_8", "psi(u) = log u - 1/(2u) - 2 int x/((u^2+x^2)(e^(2 pi x)-1))", "Differentiating (3.5) results in",
       {u_pos}, grid("u", {"0.5", "1", "3"}), false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal two_pi = 2 * pi();
         const ExtReal integral = bose_integral(
             [&](const ExtReal& x) { return x / (u * u + x * x) * bose(two_pi * x); }, tol, "digamma Bose integral");
         return Eqs{{"digamma vs integral", specfun::digamma(u), log(u) - 1 / (2 * u) - 2 * integral}};
       }});

  add({"EQ_3_10", "J(u) as a Bose integral equals minus the log-weighted digamma remainder integral",
       "We multiply this by", {u_pos}, grid("u", {"0.5", "1", "2"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         return Eqs{{"Bose form vs digamma form", ident::named_function_eval(Named::J, u, tol),
                     ident::J_digamma(u, tol)}};
       }});

  add({"EQ_3_11", "zeta''(0, u) through the digamma remainder integral, against the Bose-integral form",
       "and using (3.6) we obtain", {u_pos}, grid("u", {"0.5", "1", "2"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         return Eqs{{"digamma form vs Bose form", ident::hurwitz_d2_at0_digamma(u, tol),
                     ident::hurwitz_d2_at0_bose(u, tol)}};
       }});

  add({"EQ_3_12", "zeta''(0) = -2 + 2 int [psi(t+1) - log(t+1) + 1/(2(t+1))] log t, against the closed form",
       "With $u=1$ we get", {}, {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         return Eqs{{"integral vs closed form", -2 - 2 * ident::J_digamma(ExtReal(1), tol), zeta2_closed()}};
       }});

  add({"EQ_3_13", "integral of [log u - log(1+u) + 1/(1+u)] log u over (0, inf) equals 1", "we then see that", {},
       {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         auto f = [](const ExtReal& u) -> ExtReal {
           if (u > 10000) {
             // sum_{k>=2} (-1)^k (1/k - 1) u^-k
             ExtReal sum(0);
             const ExtReal inv = 1 / u;
             ExtReal power = inv * inv;
             for (int k = 2; k <= 24; ++k) {
               sum += sign(k) * (ExtReal(1) / k - 1) * power;
               power *= inv;
             }
             return sum;
           }
           return 1 / (1 + u) - boost::math::log1p(1 / u);
         };
         const ExtReal lhs = value(quad::integrate_with_log_weight(f, 1, tol), "algebraic log integral");
         return Eqs{{"integral vs 1", lhs, ExtReal(1)}};
       }});

  const ParamSpec u_half = positive("u", "positive integer or half-integer");
  add({"EQ_3_13_1", "gamma_1(u) through the trigamma remainder integral, against gamma_1(u) from gamma_1 and gamma",
       "By differentiating (3.11) and noting", {u_half}, grid("u", {"0.5", "1", "2"}), false, half_integer_only,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         return Eqs{{"integral vs closed form", ident::gamma1_u_remainder(u, tol), gamma1_closed(u)}};
       }});

  add({"EQ_3_13_2",
       "gamma_1(u) = -log^2(u)/2 + int [psi'(t+u) - 1/(t+u)] log t (the printed extra (1/u - 1) log(u)/2 "
       "term is dropped, since int log t/(t+u)^2 = log(u)/u)",
       "and with $u = 1$ we have", {u_half}, grid("u", {"0.5", "1", "2"}), false, half_integer_only,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         return Eqs{{"integral vs closed form", ident::gamma1_u_trigamma(u, tol), gamma1_closed(u)}};
       }});

  add({"EQ_3_13_3", "gamma_1 as the integral of [psi'(t+1) - 1/(t+1)] log t", "and we see that (3.13.3) is in agreement",
       {}, {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         return Eqs{{"integral vs oracle", ident::gamma1_u_trigamma(ExtReal(1), tol), gamma_n(1)}};
       }});

  add({"EQ_3_13_3_CHOI", "gamma_1(u) through two Bose integrals, against gamma_1(u) from gamma_1 and gamma",
       "concurs with the equivalent formula", {u_half}, grid("u", {"0.5", "1", "2"}), false, half_integer_only,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         return Eqs{{"Bose integrals vs closed form", ident::gamma1_u_bose(u, tol), gamma1_closed(u)}};
       }});

  add({"JKH_ALGEBRA", "H(u) = 2[2 K(u/2) log 2 + J(u/2) - J(u)]", "Simple algebra shows us", {u_pos},
       grid("u", {"0.5", "2", "3.5"}), false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal half = u / 2;
         const ExtReal rhs = 2 * (2 * ident::named_function_eval(Named::K, half, tol) * log(ExtReal(2)) +
                                  ident::named_function_eval(Named::J, half, tol) -
                                  ident::named_function_eval(Named::J, u, tol));
         return Eqs{{"H vs J/K combination", ident::named_function_eval(Named::H, u, tol), rhs}};
       }});

  add({"HPRIME_1", "H'(1) as two Fermi-weighted integrals equals gamma_1 + gamma log 2 - log^2(2)/2",
       "In particular, we have", {}, {Params{}}, false, nullptr, [](const Params&, const ExtReal& tol) {
         const ExtReal p = pi();
         const ExtReal a = bose_integral([&](const ExtReal& x) { return atan(x) / (1 + x * x) * fermi(p * x); }, tol,
                                         "arctan Fermi integral");
         const ExtReal b = bose_integral(
             [&](const ExtReal& x) { return x * log(1 + x * x) / (1 + x * x) * fermi(p * x); }, tol,
             "log Fermi integral");
         const ExtReal l2 = log(ExtReal(2));
         return Eqs{{"integrals vs constants", 2 * a - b, gamma_n(1) + euler() * l2 - l2 * l2 / 2}};
       }});

  add({"SE_INTEGRAL", "integral of arctan x/((1+x^2)(e^(pi x)+1)) equals pi^2/16 - 1/4 - S/4",
       "One of the respondents to a question", {}, {Params{}}, false, nullptr,
       [](const Params&, const ExtReal& tol) {
         const ExtReal p = pi();
         const ExtReal lhs = bose_integral([&](const ExtReal& x) { return atan(x) / (1 + x * x) * fermi(p * x); }, tol,
                                           "arctan Fermi integral");
         return Eqs{{"integral vs S", lhs, p * p / 16 - ExtReal(1) / 4 - cohen_routes().value / 4}};
       }});

  add({"EQ_3_14", "psi(v) - log v + 1/(2v) = -2 int x/((1+x^2)(e^(2 pi v x)-1))", "Making the substitution",
       {positive("v", "argument t + u")}, grid("v", {"0.5", "1", "3"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& v = get(p, "v");
         const ExtReal scale = 2 * pi() * v;
         const ExtReal integral = bose_integral(
             [&](const ExtReal& x) { return x / (1 + x * x) * bose(scale * x); }, tol, "scaled Bose integral");
         return Eqs{{"digamma remainder vs integral", specfun::digamma_remainder(v), -2 * integral}};
       }});

  add({"EQ_3_15", "integral of log(1 - e^(-2 pi u x))/(1+x^2) equals -2 pi u int arctan x/(e^(2 pi u x)-1)",
       "hence we have the definite integral", {u_pos}, grid("u", {"0.5", "1", "2"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal scale = 2 * pi() * u;
         const ExtReal lhs = bose_integral(
             [&](const ExtReal& x) {
               const ExtReal y = scale * x;
               const ExtReal l = y < 1 ? log(-boost::math::expm1(-y)) : boost::math::log1p(-exp(-y));
               return l / (1 + x * x);
             },
             tol, "log(1 - e^-y) integral");
         const ExtReal integral =
             bose_integral([&](const ExtReal& x) { return atan(x) * bose(scale * x); }, tol, "arctan Bose integral");
         return Eqs{{"log integral vs arctan integral", lhs, -scale * integral}};
       }});

  add({"EQ_3_16_17", "I(u) equals -2 K(u) and the closed form in log Gamma(u)", "which was also derived in [18]",
       {u_pos}, grid("u", {"0.5", "1", "2", "5"}), false, nullptr, [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal i = ident::named_function_eval(Named::I, u, tol);
         return Eqs{{"I vs -2K", i, -2 * ident::named_function_eval(Named::K, u, tol)},
                    {"I vs log Gamma closed form", i, ident::I_closed(u)}};
       }});

  add({"EQ_3_18", "integral of psi'(t+u) - 1/(t+u) over t equals log u - psi(u)",
       "of which (2.2) is a particular case", {u_pos}, grid("u", {"0.5", "1", "2"}), false, nullptr,
       [](const Params& p, const ExtReal& tol) {
         const ExtReal& u = get(p, "u");
         const ExtReal lhs = value(quad::integrate_with_log_weight(
                                       [&](const ExtReal& t) { return specfun::trigamma_minus_inverse(t + u); }, 0,
                                       tol, trigamma_tail(u)),
                                   "psi'(t+u) - 1/(t+u)");
         return Eqs{{"integral vs log u - psi(u)", lhs, log(u) - specfun::digamma(u)}};
       }});

  // zeta^(n)(0) and the constant sequences
  const ParamSpec n_seq = int_param("n", 0, constants::kSequenceMax, "derivative order");
  add({"EQ_4_1",
       "functional-equation Leibniz sum for 2 zeta^(n)(0), including the i = n term with f(0) = -1, against "
       "the kernel A integral route (n <= 8) or the Lehmer route",
       "and thus we obtain", {n_seq}, int_grid("n", 0, 10), false, nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         const ExtReal other = n <= constants::kIntegralMax
                                   ? constants::zeta_deriv0(n, ZetaRoute::integral_1_8).value
                                   : constants::zeta_deriv0(n, ZetaRoute::lehmer_4_19).value;
         return Eqs{{"functional equation vs independent route", zeta_fe(n), other}};
       }});

  add({"EQ_4_2", "n gamma_(n-1) = 2 sum C(n,i) Y_i(g(0), ...) zeta^(n-i)(0)", "it was recently shown in [20]",
       {int_param("n", 1, constants::kSequenceMax, "index")}, int_grid("n", 1, 6), false, nullptr,
       [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         std::vector<ExtReal> g;
         for (int i = 0; i < n; ++i) g.push_back(constants::g_deriv0(i));
         ExtReal rhs(0);
         for (int i = 0; i <= n; ++i) {
           rhs += binom(n, i) * bell_y(g, i) * constants::zeta_deriv0(n - i, ZetaRoute::lehmer_4_19).value;
         }
         return Eqs{{"oracle vs Bell sum", n * gamma_n(n - 1), 2 * rhs}};
       }});

  add({"EQ_4_6", "(-1)^n (n+1) gamma_n = Y_(n+1)(-0! eta_0, ..., -n! eta_n)", "We showed in [16] that",
       {int_param("n", 0, constants::kSequenceMax, "index")}, int_grid("n", 0, 8), false, nullptr,
       [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         std::vector<ExtReal> x;
         for (int m = 0; m <= n; ++m) x.push_back(-fact(m) * constants::eta(m).value);
         return Eqs{{"oracle vs Bell of eta", sign(n) * (n + 1) * gamma_n(n), bell_y(x, n + 1)}};
       }});

  add({"EQ_4_9_21",
       "2 zeta^(n)(0) as a Bell polynomial of the d_k, and the Lehmer-b and mu forms related by Bell parity",
       "Using (4.7) again gives us", {int_param("n", 1, constants::kSequenceMax, "derivative order")},
       int_grid("n", 1, 10), false, nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         std::vector<ExtReal> d{-log_two_pi()};
         std::vector<ExtReal> lehmer, mu;
         for (int m = 1; m <= n; ++m) {
           if (m >= 2) d.push_back(constants::d_n_display(m).value * fact(m - 1));
           const ExtReal b = constants::lehmer_b(m - 1).value;
           lehmer.push_back(sign(m) * (1 + b) * fact(m - 1));
           const ExtReal mu_m = sign(m - 1) * b;  // b_k = (-1)^k mu_k
           mu.push_back((1 + sign(m - 1) * mu_m) * fact(m - 1));
         }
         const ExtReal lhs = sign(n + 1) * bell_y(d, n) / 2;
         const ExtReal with_b = sign(n + 1) * bell_y(lehmer, n) / 2;
         const ExtReal with_mu = -bell_y(mu, n) / 2;
         return Eqs{{"d form vs functional equation", lhs, zeta_fe(n)}, {"b form vs mu form", with_b, with_mu}};
       }});

  add({"EQ_4_11_17", "sigma_n from eta_(n-1) equals sigma_n from the Lehmer constant b_(n-1)",
       "shown by Zhang and Williams in 1994", {int_param("n", 1, constants::kSequenceMax + 1, "index")},
       int_grid("n", 1, 11), false, nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         return Eqs{{"eta route vs Lehmer route", constants::sigma_from_eta(n).value,
                     constants::sigma_from_lehmer(n).value}};
       }});

  add({"EQ_4_16", "2[m zeta^(m-1)(0) - zeta^(m)(0)] = Y_m(0! b_0, ..., (m-1)! b_(m-1))",
       "2[m\\zeta^{(m-1)}(0) - \\zeta^{(m)}(0)]", {int_param("m", 1, constants::kSequenceMax, "index")},
       int_grid("m", 1, 8), false, nullptr, [](const Params& p, const ExtReal&) {
         const int m = get_int(p, "m");
         std::vector<ExtReal> x;
         for (int k = 0; k < m; ++k) x.push_back(fact(k) * constants::lehmer_b(k).value);
         return Eqs{{"zeta combination vs Bell of b", 2 * (m * zeta_fe(m - 1) - zeta_fe(m)), bell_y(x, m)}};
       }});

  add({"EQ_4_18", "d_n from zeta(n) and eta_(n-1) equals (-1)^n (1 + b_(n-1))",
       "and accordingly we obtain from (4.12)", {int_param("n", 2, constants::kSequenceMax, "index")},
       int_grid("n", 2, 10), false, nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         return Eqs{{"display vs Lehmer form", constants::d_n_display(n).value, constants::d_n_lehmer(n).value}};
       }});

  add({"EQ_4_19", "2 zeta^(n)(0) as a Bell polynomial of the Lehmer constants, against the functional-equation route",
       "Since [27] $b_0 = \\log(2\\pi) - 1$ we have", {n_seq}, int_grid("n", 1, 10), false, nullptr,
       [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         return Eqs{{"Lehmer Bell vs functional equation", constants::zeta_deriv0(n, ZetaRoute::lehmer_4_19).value,
                     zeta_fe(n)}};
       }});

  add({"EQ_4_24", "recurrence zeta^(n+1)(0) = sum C(n,i) i! zeta^(n-i)(0) (1 + b_i)", "we obtain the recurrence",
       {n_seq}, int_grid("n", 1, 10), false, nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         return Eqs{{"recurrence vs functional equation",
                     constants::zeta_deriv0(n, ZetaRoute::recurrence_4_24).value, zeta_fe(n)}};
       }});

  add({"EQ_1_12_1", "d^n/ds^n (s-1) zeta(s) at s = 1 equals (-1)^(n-1) n gamma_(n-1), by finite differences",
       "It is easily seen from the Laurent expansion", {int_param("n", 1, 4, "derivative order")},
       int_grid("n", 1, 4), false, nullptr, [](const Params& p, const ExtReal&) {
         const int n = get_int(p, "n");
         return Eqs{{"finite difference vs oracle", constants::laurent_derivative_fd(n, ExtReal(constants::kFdStep)),
                     sign(n - 1) * n * gamma_n(n - 1)}};
       }});

  add({"F_SERIES", "d^k/ds^k s zeta(1-s) at s = 0 equals k gamma_(k-1), by finite differences",
       "we see that with $s \\rightarrow 1-s$", {int_param("k", 1, 3, "derivative order")}, int_grid("k", 1, 3),
       false, nullptr, [](const Params& p, const ExtReal&) {
         const int k = get_int(p, "k");
         return Eqs{{"finite difference vs oracle", constants::f_series_fd(k, ExtReal(constants::kFdStep)),
                     k * gamma_n(k - 1)}};
       }});

  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return v;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> records = build();
  return records;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a{{"EQ_1_9_vs_1_10", "EQ_1_9"}};
  return a;
}

const IdentityRecord* find(const std::string& id) {
  auto alias = aliases().find(id);
  const std::string& key = alias == aliases().end() ? id : alias->second;
  for (const auto& r : catalog()) {
    if (r.id == key) return &r;
  }
  if (key == synthetic_failure().id) return &synthetic_failure();
  return nullptr;
}

const IdentityRecord& synthetic_failure() {
  static const IdentityRecord r{"SYNTHETIC_FAIL", "always fails: 0 against 1", "", {}, {Params{}}, false, nullptr,
                                [](const Params&, const ExtReal&) {
                                  return Eqs{{"zero vs one", ExtReal(0), ExtReal(1)}};
                                }};
  return r;
}

ExtReal quadrature_tol(const ExtReal& tol) {
  const ExtReal fine = tol / 1000;
  const ExtReal base = quad::default_tol();
  return fine < base ? fine : base;
}

ExtReal effective_tol(const IdentityRecord& r, const ExtReal& tol) {
  const ExtReal loose("1e-6");
  return r.relaxed && tol < loose ? loose : tol;
}

void validate_params(const IdentityRecord& r, const Params& p) {
  for (const auto& [name, v] : p) {
    auto spec = std::find_if(r.params.begin(), r.params.end(), [&](const ParamSpec& s) { return s.name == name; });
    if (spec == r.params.end()) throw DomainError(r.id + " has no parameter named " + name);
    const std::string where = r.id + ": " + name + " = " + short_decimal(v);
    if (spec->integer && v != floor(v)) throw DomainError(where + " must be an integer");
    if (spec->lo && (spec->lo_closed ? v < *spec->lo : v <= *spec->lo)) {
      throw DomainError(where + " below the domain (" + spec->meaning + ")");
    }
    if (spec->hi && (spec->hi_closed ? v > *spec->hi : v >= *spec->hi)) {
      throw DomainError(where + " above the domain (" + spec->meaning + ")");
    }
    for (const auto& e : spec->excluded) {
      if (v == e) throw DomainError(where + " is excluded (" + spec->meaning + ")");
    }
  }
  for (const auto& spec : r.params) {
    if (!p.count(spec.name)) throw DomainError(r.id + ": missing parameter " + spec.name);
  }
  if (r.restrict) {
    const std::string msg = r.restrict(p);
    if (!msg.empty()) throw DomainError(r.id + ": " + msg);
  }
}

std::vector<Params> expand_params(const IdentityRecord& r, const Params& given) {
  std::vector<Params> out;
  std::set<Params> seen;
  for (Params point : r.default_grid) {
    for (const auto& [k, v] : given) point[k] = v;
    if (seen.insert(point).second) out.push_back(point);
  }
  if (out.empty()) out.push_back(given);
  return out;
}

Residual evaluate(const IdentityRecord& r, const Params& params, const ExtReal& tol) {
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");
  const auto points = expand_params(r, params);
  for (const auto& p : points) validate_params(r, p);

  const ExtReal qtol = quadrature_tol(tol);
  Residual out;
  out.id = r.id;
  out.tol = effective_tol(r, tol);
  const std::size_t before = quad::evaluation_count();
  bool first = true;
  for (const auto& p : points) {
    for (const Equation& e : r.evaluate(p, qtol)) {
      const ExtReal abs_err = abs(e.lhs - e.rhs);
      if (first || abs_err > out.abs_err) {
        first = false;
        const std::string where = point_label(p);
        out.label = where.empty() ? e.label : e.label + " at " + where;
        out.lhs_value = e.lhs;
        out.rhs_value = e.rhs;
        out.abs_err = abs_err;
        out.rel_err = e.rhs != 0 ? abs_err / abs(e.rhs) : abs_err;
      }
    }
  }
  out.evaluations = quad::evaluation_count() - before;
  out.pass = !first && out.abs_err <= out.tol;
  return out;
}

Residual evaluate_identity(const std::string& id, const Params& params, const ExtReal& tol) {
  const IdentityRecord* r = find(id);
  if (!r) throw ArgumentError("unknown identity id: " + id);
  Residual out = evaluate(*r, params, tol);
  out.id = id;
  return out;
}

}  // namespace zwb::catalog
