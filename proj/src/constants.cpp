#include "zwb/constants.hpp"

#include "zwb/bell.hpp"
#include "zwb/identities.hpp"
#include "zwb/specfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace zwb::constants {

using bell::BellInput;
using ident::Kernel;

namespace {

void require_range(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi) {
    throw ArgumentError(what + ": index " + std::to_string(n) + " outside " + std::to_string(lo) + ".." +
                        std::to_string(hi));
  }
}

ExtReal factorial_ext(int n) { return ExtReal(bell::factorial(static_cast<unsigned>(n))); }
ExtReal binom_ext(int n, int k) {
  return ExtReal(bell::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
}
ExtReal sign(int n) { return ExtReal(n % 2 == 0 ? 1 : -1); }

Estimate zeta_at(int m) {
  const ExtReal v = specfun::zeta_em(ExtReal(m));
  return {v, eps_digits(2) * std::max(ExtReal(1), ExtReal(abs(v)))};
}

Estimate gamma_oracle(int n) { return {specfun::stieltjes_oracle(n), specfun::stieltjes_oracle_err(n)}; }

Estimate moment(Kernel k, int j) { return ident::kernel_moment_estimate(k, j); }

Estimate complete_bell(const std::vector<Estimate>& x, int n) {
  return bell::complete_recurrence(BellInput<Estimate>(x), static_cast<unsigned>(n));
}

std::vector<Estimate> complete_bell_all(const std::vector<Estimate>& x, int n) {
  return bell::complete_recurrence_all(BellInput<Estimate>(x), static_cast<unsigned>(n));
}

// psi(2-s) - psi(s) at s = 1 and its derivatives: x_1 = 0, x_m = -[1 + (-1)^m] (m-1)! zeta(m)
std::vector<Estimate> reciprocal_gamma_args(int n) {
  std::vector<Estimate> x;
  for (int m = 1; m <= n; ++m) {
    if (m % 2 == 1) {
      x.push_back(Estimate::exact(ExtReal(0)));
    } else {
      x.push_back(ExtReal(-2) * factorial_ext(m - 1) * zeta_at(m));
    }
  }
  return x;
}

// x'_m = [(-1)^{m+1} - 1] zeta(m) (m-1)!
std::vector<Estimate> kernel_a_args(int n) {
  std::vector<Estimate> x;
  for (int m = 1; m <= n; ++m) {
    if (m % 2 == 1) {
      x.push_back(Estimate::exact(ExtReal(0)));
    } else {
      x.push_back(ExtReal(-2) * factorial_ext(m - 1) * zeta_at(m));
    }
  }
  return x;
}

std::vector<Estimate> negated(std::vector<Estimate> x) {
  for (auto& e : x) e = -e;
  return x;
}

Estimate zeta_functional(int n) {
  // 2 zeta^(n)(0) = sum_i C(n,i) Y_i(-g(0), ..., -g^(i-1)(0)) f^(n-i)(0)
  std::vector<Estimate> x;
  for (int m = 1; m <= n; ++m) x.push_back(Estimate(-g_deriv0(m - 1), eps_digits(2)));
  const auto y = complete_bell_all(x, n);
  Estimate total = Estimate::exact(ExtReal(0));
  for (int i = 0; i <= n; ++i) total = total + binom_ext(n, i) * (y[i] * f_deriv0(n - i));
  return total / ExtReal(2);
}

std::vector<Estimate> eta_all(int n) {
  // y_m = (-1)^{m-1} m gamma_{m-1} = Y_m(-0! eta_0, ..., -(m-1)! eta_{m-1})
  std::vector<Estimate> y;
  for (int m = 1; m <= n + 1; ++m) y.push_back((sign(m - 1) * m) * gamma_oracle(m - 1));
  const auto x = bell::invert(BellInput<Estimate>(y));
  std::vector<Estimate> eta;
  for (int m = 1; m <= n + 1; ++m) eta.push_back(-(x[m - 1] / factorial_ext(m - 1)));
  return eta;
}

std::vector<Estimate> lehmer_inversion_all(int n) {
  std::vector<Estimate> y;
  Estimate previous = zeta_functional(0);
  for (int m = 1; m <= n + 1; ++m) {
    const Estimate current = zeta_functional(m);
    y.push_back(ExtReal(2) * (ExtReal(m) * previous - current));
    previous = current;
  }
  const auto x = bell::invert(BellInput<Estimate>(y));
  std::vector<Estimate> b;
  for (int m = 1; m <= n + 1; ++m) b.push_back(x[m - 1] / factorial_ext(m - 1));
  return b;
}

Estimate stieltjes_bell(int n) {
  const auto y = complete_bell_all(reciprocal_gamma_args(n), n);
  Estimate total = Estimate::exact(ExtReal(0));
  for (int k = 0; k <= n; ++k) total = total + (binom_ext(n, k) * sign(k)) * (y[k] * moment(Kernel::B, n - k));
  return total;
}

Estimate stieltjes_inversion(int n) {
  // int B log^n = sum_k C(n,k) Y_k(x^f) (-1)^k gamma_{n-k}, solved upwards for gamma_n
  const auto y = complete_bell_all(negated(reciprocal_gamma_args(n)), n);
  std::vector<Estimate> gamma;
  for (int m = 0; m <= n; ++m) {
    Estimate g = moment(Kernel::B, m);
    for (int k = 1; k <= m; ++k) g = g - (binom_ext(m, k) * sign(k)) * (y[k] * gamma[m - k]);
    gamma.push_back(g);
  }
  return gamma[n];
}

Estimate stieltjes_leibniz(int n) {
  // (-1)^{N-1} N gamma_{N-1} = sum_j C(N,j) pi^{N-j-1} sin((N-j) pi/2) (-1)^j int B log^j,  N = n+1
  const int big_n = n + 1;
  const ExtReal p = pi();
  Estimate total = Estimate::exact(ExtReal(0));
  for (int j = 0; j <= big_n; ++j) {
    const int r = big_n - j;
    if (r % 2 == 0) continue;
    const ExtReal s = ExtReal(r % 4 == 1 ? 1 : -1);
    total = total + (binom_ext(big_n, j) * pow(p, r - 1) * s * sign(j)) * moment(Kernel::B, j);
  }
  return (sign(n) / ExtReal(big_n)) * total;
}

Estimate zeta_bell(int n) {
  if (n == 0) return Estimate::exact(ExtReal(-1) / 2);
  // zeta^(n)(0) = n (-1)^n sum_k C(n-1,k) (-1)^{k+1} Y_k(x') int A log^{n-k-1}
  const auto y = complete_bell_all(kernel_a_args(n - 1), n - 1);
  Estimate total = Estimate::exact(ExtReal(0));
  for (int k = 0; k <= n - 1; ++k) {
    total = total + (binom_ext(n - 1, k) * sign(k + 1)) * (y[k] * moment(Kernel::A, n - k - 1));
  }
  return (ExtReal(n) * sign(n)) * total;
}

Estimate zeta_leibniz(int n) {
  if (n == 0) return Estimate::exact(ExtReal(-1) / 2);
  // sum_{k<n} C(n,k) zeta^(n-k)(0) Y_k(-x') = n (-1)^{n-1} int A log^{n-1}
  const auto y = complete_bell_all(negated(kernel_a_args(n)), n);
  std::vector<Estimate> d(n + 1);
  for (int m = 1; m <= n; ++m) {
    Estimate v = (ExtReal(m) * sign(m - 1)) * moment(Kernel::A, m - 1);
    for (int k = 1; k <= m - 1; ++k) v = v - binom_ext(m, k) * (d[m - k] * y[k]);
    d[m] = v;
  }
  return d[n];
}

Estimate zeta_lehmer(int n) {
  // 2 zeta^(n)(0) = (-1)^{n+1} Y_n(x_m = (-1)^m [1 + b_{m-1}] (m-1)!)
  std::vector<Estimate> x;
  for (int m = 1; m <= n; ++m) {
    x.push_back((sign(m) * factorial_ext(m - 1)) * (Estimate::exact(ExtReal(1)) + lehmer_b(m - 1)));
  }
  return (sign(n + 1) / ExtReal(2)) * complete_bell(x, n);
}

Estimate zeta_recurrence(int n) {
  std::vector<Estimate> z{Estimate::exact(ExtReal(-1) / 2)};
  for (int m = 0; m < n; ++m) {
    Estimate next = Estimate::exact(ExtReal(0));
    for (int i = 0; i <= m; ++i) {
      next = next + (binom_ext(m, i) * factorial_ext(i)) * (z[m - i] * (Estimate::exact(ExtReal(1)) + lehmer_b(i)));
    }
    z.push_back(next);
  }
  return z[n];
}

const std::vector<Rational>& stencil_weights(int order) {
  // Fornberg's recursion on the nodes 0, 1, -1, 2, -2, ..., 4, -4.
  static std::mutex mutex;
  static std::map<int, std::vector<Rational>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  constexpr int kHalf = 4;
  std::vector<long> nodes{0};
  for (int j = 1; j <= kHalf; ++j) {
    nodes.push_back(j);
    nodes.push_back(-j);
  }
  const int count = static_cast<int>(nodes.size());
  // c[k][j]: weight of node j for derivative order k
  std::vector<std::vector<Rational>> c(order + 1, std::vector<Rational>(count, Rational(0)));
  c[0][0] = 1;
  Rational c1(1);
  for (int i = 1; i < count; ++i) {
    Rational c2(1);
    const int mn = std::min(i, order);
    for (int j = 0; j < i; ++j) {
      const Rational c3(nodes[i] - nodes[j]);
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - Rational(nodes[i - 1]) * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * Rational(nodes[i - 1]) * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (Rational(nodes[i]) * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = Rational(nodes[i]) * c[0][j] / c3;
    }
    c1 = c2;
  }
  std::vector<Rational> by_offset(2 * kHalf + 1);
  for (int i = 0; i < count; ++i) by_offset[nodes[i] + kHalf] = c[order][i];
  return cache.emplace(order, std::move(by_offset)).first->second;
}

}  // namespace

std::string to_string(Tag t) {
  switch (t) {
    case Tag::stieltjes: return "stieltjes";
    case Tag::eta: return "eta";
    case Tag::sigma: return "sigma";
    case Tag::lehmer_b: return "lehmer_b";
    case Tag::d_n: return "d_n";
    case Tag::zeta_deriv0: return "zeta_deriv0";
  }
  return "?";
}

std::string to_string(StieltjesRoute r) {
  switch (r) {
    case StieltjesRoute::oracle: return "oracle";
    case StieltjesRoute::bell_2_3: return "bell_2_3";
    case StieltjesRoute::leibniz_2_13: return "leibniz_2_13";
    case StieltjesRoute::inversion_2_5: return "inversion_2_5";
  }
  return "?";
}

std::string to_string(ZetaRoute r) {
  switch (r) {
    case ZetaRoute::integral_1_8: return "integral_1_8";
    case ZetaRoute::bell_1_16: return "bell_1_16";
    case ZetaRoute::leibniz_1_16_1: return "leibniz_1_16_1";
    case ZetaRoute::functional_4_1: return "functional_4_1";
    case ZetaRoute::lehmer_4_19: return "lehmer_4_19";
    case ZetaRoute::recurrence_4_24: return "recurrence_4_24";
  }
  return "?";
}

std::optional<Tag> parse_tag(const std::string& s) {
  static const std::map<std::string, Tag> names{
      {"stieltjes", Tag::stieltjes}, {"gamma", Tag::stieltjes},        {"γ", Tag::stieltjes},
      {"eta", Tag::eta},             {"η", Tag::eta},                  {"sigma", Tag::sigma},
      {"σ", Tag::sigma},             {"lehmer_b", Tag::lehmer_b},      {"lehmer-b", Tag::lehmer_b},
      {"b", Tag::lehmer_b},          {"d_n", Tag::d_n},                {"d", Tag::d_n},
      {"zeta_deriv0", Tag::zeta_deriv0}, {"zeta-deriv0", Tag::zeta_deriv0},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

const std::vector<StieltjesRoute>& all_stieltjes_routes() {
  static const std::vector<StieltjesRoute> routes{StieltjesRoute::oracle, StieltjesRoute::bell_2_3,
                                                  StieltjesRoute::leibniz_2_13, StieltjesRoute::inversion_2_5};
  return routes;
}

const std::vector<ZetaRoute>& all_zeta_routes() {
  static const std::vector<ZetaRoute> routes{ZetaRoute::integral_1_8,   ZetaRoute::bell_1_16,
                                             ZetaRoute::leibniz_1_16_1, ZetaRoute::functional_4_1,
                                             ZetaRoute::lehmer_4_19,    ZetaRoute::recurrence_4_24};
  return routes;
}

std::optional<StieltjesRoute> parse_stieltjes_route(const std::string& s) {
  for (auto r : all_stieltjes_routes()) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

std::optional<ZetaRoute> parse_zeta_route(const std::string& s) {
  for (auto r : all_zeta_routes()) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

ExtReal g_deriv0(int i) {
  if (i < 0) throw ArgumentError("g_deriv0: negative index");
  if (i == 0) return -(specfun::euler_gamma() + log_two_pi());
  const ExtReal half_power = pow(ExtReal(2), -(i + 1));
  const ExtReal bracket = half_power * ((i + 1) % 2 == 0 ? 2 : 0) - 1;
  return bracket * factorial_ext(i) * specfun::zeta_em(ExtReal(i + 1));
}

Estimate f_deriv0(int k) {
  if (k < 0) throw ArgumentError("f_deriv0: negative index");
  if (k == 0) return Estimate::exact(ExtReal(-1));
  return ExtReal(k) * gamma_oracle(k - 1);
}

Estimate stieltjes(int n, StieltjesRoute route) {
  if (route == StieltjesRoute::oracle) {
    require_range(n, 0, specfun::kStieltjesMax, "stieltjes oracle");
    return gamma_oracle(n);
  }
  require_range(n, 0, kIntegralMax, "stieltjes " + to_string(route));
  switch (route) {
    case StieltjesRoute::bell_2_3: return stieltjes_bell(n);
    case StieltjesRoute::leibniz_2_13: return stieltjes_leibniz(n);
    case StieltjesRoute::inversion_2_5: return stieltjes_inversion(n);
    default: break;
  }
  throw ArgumentError("unknown Stieltjes route");
}

Estimate zeta_deriv0(int n, ZetaRoute route) {
  switch (route) {
    case ZetaRoute::integral_1_8:
      require_range(n, 0, kIntegralMax, "zeta_deriv0 integral_1_8");
      return ident::zeta_deriv_from_kernel(n, ExtReal(0));
    case ZetaRoute::bell_1_16:
      require_range(n, 0, kIntegralMax, "zeta_deriv0 bell_1_16");
      return zeta_bell(n);
    case ZetaRoute::leibniz_1_16_1:
      require_range(n, 0, kIntegralMax, "zeta_deriv0 leibniz_1_16_1");
      return zeta_leibniz(n);
    case ZetaRoute::functional_4_1:
      require_range(n, 0, kSequenceMax, "zeta_deriv0 functional_4_1");
      return zeta_functional(n);
    case ZetaRoute::lehmer_4_19:
      require_range(n, 0, kSequenceMax, "zeta_deriv0 lehmer_4_19");
      return zeta_lehmer(n);
    case ZetaRoute::recurrence_4_24:
      require_range(n, 0, kSequenceMax, "zeta_deriv0 recurrence_4_24");
      return zeta_recurrence(n);
  }
  throw ArgumentError("unknown zeta route");
}

Estimate eta(int n) {
  require_range(n, 0, kSequenceMax, "eta");
  return eta_all(n)[n];
}

Estimate sigma_from_eta(int n) {
  require_range(n, 1, kSequenceMax + 1, "sigma");
  if (n == 1) {
    return Estimate(1 + specfun::euler_gamma() / 2 - log(4 * pi()) / 2, specfun::stieltjes_oracle_err(0));
  }
  const ExtReal weight = 1 - pow(ExtReal(2), -n);
  return sign(n) * eta_all(n - 1)[n - 1] + Estimate::exact(ExtReal(1)) - weight * zeta_at(n);
}

Estimate sigma_from_lehmer(int n) {
  require_range(n, 1, kSequenceMax + 1, "sigma");
  if (n == 1) {
    // finite part: the divergent zeta(1)/2 is replaced by gamma/2 + log(pi)/2
    return Estimate::exact(specfun::euler_gamma() / 2 + log(pi()) / 2) - lehmer_inversion_all(0)[0];
  }
  return -lehmer_inversion_all(n - 1)[n - 1] - (sign(n) * pow(ExtReal(2), -n)) * zeta_at(n);
}

Estimate sigma(int n) {
  const Estimate a = sigma_from_eta(n);
  const Estimate b = sigma_from_lehmer(n);
  return a.err <= b.err ? a : b;
}

Estimate lehmer_b(int n) {
  require_range(n, 0, kSequenceMax, "lehmer_b");
  if (n == 0) return Estimate::exact(log_two_pi() - 1);
  const int m = n + 1;
  return -(sigma_from_eta(m) + (sign(m) * pow(ExtReal(2), -m)) * zeta_at(m));
}

Estimate lehmer_b_inversion(int n) {
  require_range(n, 0, kSequenceMax, "lehmer_b inversion");
  return lehmer_inversion_all(n)[n];
}

Estimate d_n_display(int n) {
  require_range(n, 2, kSequenceMax, "d_n");
  const ExtReal s = sign(n);
  const ExtReal coeff = s - pow(ExtReal(2), -n) * (s + 1);
  return coeff * zeta_at(n) - eta(n - 1);
}

Estimate d_n_lehmer(int n) {
  require_range(n, 2, kSequenceMax, "d_n");
  return sign(n) * (Estimate::exact(ExtReal(1)) + lehmer_b_inversion(n - 1));
}

Estimate d_n(int n) {
  const Estimate a = d_n_display(n);
  const Estimate b = d_n_lehmer(n);
  return a.err <= b.err ? a : b;
}

ExtReal gamma1_of_u(const ExtReal& u) { return ident::gamma1_u_trigamma(u); }
ExtReal gamma1_of_u_choi(const ExtReal& u) { return ident::gamma1_u_bose(u); }

ExtReal central_derivative(const std::function<ExtReal(const ExtReal&)>& f, const ExtReal& x0, int n,
                           const ExtReal& h, const std::optional<ExtReal>& at_x0) {
  if (n < 1 || n > 6) throw ArgumentError("central_derivative supports orders 1..6");
  const auto& w = stencil_weights(n);
  ExtReal total(0);
  for (int j = -4; j <= 4; ++j) {
    const Rational& c = w[j + 4];
    if (c == 0) continue;
    const ExtReal v = (j == 0 && at_x0) ? *at_x0 : f(x0 + h * j);
    total += to_ext(c) * v;
  }
  return total / pow(h, n);
}

ExtReal laurent_derivative_fd(int n, const ExtReal& h) {
  return central_derivative([](const ExtReal& s) { return (s - 1) * specfun::zeta_em(s); }, ExtReal(1), n, h,
                            ExtReal(1));
}

ExtReal f_series_fd(int k, const ExtReal& h) {
  return central_derivative([](const ExtReal& s) { return s * specfun::zeta_em(1 - s); }, ExtReal(0), k, h,
                            ExtReal(-1));
}

ConstantSequence sequence(Tag tag, int n0, int n1, const std::string& route) {
  if (n0 > n1) throw ArgumentError("empty index range");
  ConstantSequence out{tag, {}};
  auto push = [&](int n, const Estimate& e, const std::string& r) { out.entries.push_back({n, e.value, r, e.err}); };
  for (int n = n0; n <= n1; ++n) {
    switch (tag) {
      case Tag::stieltjes: {
        std::vector<StieltjesRoute> routes;
        if (route == "all") {
          routes = all_stieltjes_routes();
          if (n > kIntegralMax) routes = {StieltjesRoute::oracle};
        } else if (route.empty()) {
          routes = {StieltjesRoute::oracle};
        } else if (auto r = parse_stieltjes_route(route)) {
          routes = {*r};
        } else {
          throw ArgumentError("unknown Stieltjes route: " + route);
        }
        for (auto r : routes) push(n, stieltjes(n, r), to_string(r));
        break;
      }
      case Tag::zeta_deriv0: {
        std::vector<ZetaRoute> routes;
        if (route == "all") {
          for (auto r : all_zeta_routes()) {
            const bool integral = r == ZetaRoute::integral_1_8 || r == ZetaRoute::bell_1_16 ||
                                  r == ZetaRoute::leibniz_1_16_1;
            if (!integral || n <= kIntegralMax) routes.push_back(r);
          }
        } else if (route.empty()) {
          routes = {ZetaRoute::lehmer_4_19};
        } else if (auto r = parse_zeta_route(route)) {
          routes = {*r};
        } else {
          throw ArgumentError("unknown zeta route: " + route);
        }
        for (auto r : routes) push(n, zeta_deriv0(n, r), to_string(r));
        break;
      }
      case Tag::eta:
        push(n, eta(n), "bell_inversion");
        break;
      case Tag::sigma: {
        const Estimate a = sigma_from_eta(n);
        const Estimate b = sigma_from_lehmer(n);
        if (route == "all") {
          push(n, a, "from_eta");
          push(n, b, "from_lehmer_b");
        } else {
          a.err <= b.err ? push(n, a, "from_eta") : push(n, b, "from_lehmer_b");
        }
        break;
      }
      case Tag::lehmer_b:
        if (route == "all" || route == "sigma") push(n, lehmer_b(n), "from_sigma");
        if (route == "all" || route == "inversion") push(n, lehmer_b_inversion(n), "bell_inversion");
        if (route.empty()) push(n, lehmer_b(n), "from_sigma");
        break;
      case Tag::d_n: {
        const Estimate a = d_n_display(n);
        const Estimate b = d_n_lehmer(n);
        if (route == "all") {
          push(n, a, "display");
          push(n, b, "from_lehmer_b");
        } else {
          a.err <= b.err ? push(n, a, "display") : push(n, b, "from_lehmer_b");
        }
        break;
      }
    }
  }
  return out;
}

std::vector<StructureCheck> check_structure(int max_n) {
  require_range(max_n, 1, kSequenceMax, "check_structure");
  std::vector<StructureCheck> out;

  // Tracks the smallest margin of a family of strict inequalities lhs > rhs.
  struct Margin {
    Margin(std::string i, std::string d) : id(std::move(i)), description(std::move(d)) {}
    std::string id, description;
    bool any = false, pass = true;
    ExtReal lhs, rhs, margin;
    std::string detail;
    void add(int n, const ExtReal& l, const ExtReal& r) {
      const ExtReal m = l - r;
      if (!(m > 0)) {
        pass = false;
        detail += "n=" + std::to_string(n) + " violated (" + to_decimal(l, 15) + " <= " + to_decimal(r, 15) + "); ";
      }
      if (!any || m < margin) {
        lhs = l;
        rhs = r;
        margin = m;
        any = true;
      }
    }
    StructureCheck done() const { return {id, description, lhs, rhs, pass && any, detail}; }
  };

  const int sign_max = std::min(max_n, 8);
  Margin eta_sign{"STRUCT_ETA_SIGN", "(-1)^(n+1) eta_n > 0 for n = 1.." + std::to_string(sign_max)};
  for (int n = 1; n <= sign_max; ++n) eta_sign.add(n, sign(n + 1) * eta(n).value, ExtReal(0));
  out.push_back(eta_sign.done());

  Margin b_sign{"STRUCT_B_SIGN", "(-1)^n b_n > 0 for n = 0.." + std::to_string(sign_max)};
  for (int n = 0; n <= sign_max; ++n) b_sign.add(n, sign(n) * lehmer_b(n).value, ExtReal(0));
  out.push_back(b_sign.done());

  Margin sigma_ineq{"STRUCT_SIGMA_LOWER", "sigma_(n+1) > 1 - (1 - 2^-(n+1)) zeta(n+1) for n = 1.." + std::to_string(max_n)};
  for (int n = 1; n <= max_n; ++n) {
    const ExtReal z = specfun::zeta_em(ExtReal(n + 1));
    sigma_ineq.add(n, sigma(n + 1).value, 1 - (1 - pow(ExtReal(2), -(n + 1))) * z);
  }
  out.push_back(sigma_ineq.done());

  Margin b_upper{"STRUCT_B_UPPER",
                 "zeta(n+1) - 1 - [1 + (-1)^(n+1)] zeta(n+1)/2^(n+1) > b_n for n = 1.." + std::to_string(max_n)};
  for (int n = 1; n <= max_n; ++n) {
    const ExtReal z = specfun::zeta_em(ExtReal(n + 1));
    const ExtReal bound = z - 1 - (1 + sign(n + 1)) * z * pow(ExtReal(2), -(n + 1));
    b_upper.add(n, bound, lehmer_b(n).value);
  }
  out.push_back(b_upper.done());

  Margin b_even{"STRUCT_B_EVEN_BELOW_ONE", "1 > b_2n for 2n <= " + std::to_string(max_n)};
  for (int n = 0; 2 * n <= max_n; ++n) b_even.add(2 * n, ExtReal(1), lehmer_b(2 * n).value);
  out.push_back(b_even.done());

  // 2[m zeta^(m-1)(0) - zeta^(m)(0)] = Y_m(0! b_0, ..., (m-1)! b_{m-1}), zeta from the functional
  // equation route and b from the sigma route
  {
    StructureCheck bell{"STRUCT_LEHMER_BELL", "Bell form of 2[m zeta^(m-1)(0) - zeta^(m)(0)] for m = 1.." +
                                                 std::to_string(std::min(max_n, 8)),
                        ExtReal(0), ExtReal(0), true, ""};
    std::vector<Estimate> x;
    for (int m = 1; m <= std::min(max_n, 8); ++m) {
      x.push_back(factorial_ext(m - 1) * lehmer_b(m - 1));
      const ExtReal lhs = 2 * (m * zeta_functional(m - 1).value - zeta_functional(m).value);
      const ExtReal rhs = complete_bell(x, m).value;
      const ExtReal diff = abs(lhs - rhs);
      if (!(diff < ExtReal("1e-6"))) {
        bell.pass = false;
        bell.detail += "m=" + std::to_string(m) + " residual " + to_decimal(diff, 6) + "; ";
      }
      if (diff >= abs(bell.lhs - bell.rhs)) {
        bell.lhs = lhs;
        bell.rhs = rhs;
      }
    }
    out.push_back(bell);
  }

  // d^n/ds^n [(s-1) zeta(s)] at s = 1 equals (-1)^(n-1) n gamma_(n-1)
  {
    const int top = std::min(max_n, 4);
    StructureCheck laurent{"STRUCT_LAURENT_FD",
                           "finite differences of (s-1) zeta(s) at s = 1 for n = 1.." + std::to_string(top),
                           ExtReal(0), ExtReal(0), true, ""};
    const ExtReal h(kFdStep);
    ExtReal worst(-1);
    for (int n = 1; n <= top; ++n) {
      const ExtReal fd = laurent_derivative_fd(n, h);
      const ExtReal exact = sign(n - 1) * n * specfun::stieltjes_oracle(n - 1);
      const ExtReal diff = abs(fd - exact);
      if (!(diff < ExtReal("1e-10"))) {
        laurent.pass = false;
        laurent.detail += "n=" + std::to_string(n) + " residual " + to_decimal(diff, 6) + "; ";
      }
      if (diff > worst) {
        worst = diff;
        laurent.lhs = fd;
        laurent.rhs = exact;
      }
    }
    out.push_back(laurent);
  }

  // |zeta^(n)(0)/n! + 1| non-increasing for n = 4..max_n
  {
    StructureCheck trend{"STRUCT_APOSTOL_TREND",
                         "|zeta^(n)(0)/n! + 1| non-increasing for n = 4.." + std::to_string(max_n),
                         ExtReal(0), ExtReal(0), true, ""};
    if (max_n < 5) {
      trend.detail = "fewer than two indices in range";
    } else {
      ExtReal previous(0);
      for (int n = 4; n <= max_n; ++n) {
        const ExtReal c = zeta_deriv0(n, ZetaRoute::lehmer_4_19).value / factorial_ext(n);
        const ExtReal dist = abs(c + 1);
        if (n > 4 && dist > previous) {
          trend.pass = false;
          trend.detail += "n=" + std::to_string(n) + " moved away from -1; ";
        }
        previous = dist;
        trend.lhs = c;
        trend.rhs = ExtReal(-1);
      }
      if (max_n >= 8) {
        const ExtReal c8 = zeta_deriv0(8, ZetaRoute::lehmer_4_19).value / factorial_ext(8);
        const ExtReal c4 = zeta_deriv0(4, ZetaRoute::lehmer_4_19).value / factorial_ext(4);
        if (!(c8 > ExtReal("-1.1") && c8 < ExtReal("-0.6") && abs(c8 + 1) < abs(c4 + 1))) {
          trend.pass = false;
          trend.detail += "zeta^(8)(0)/8! = " + to_decimal(c8, 15) + " outside the expected window; ";
        }
      }
    }
    out.push_back(trend);
  }
  return out;
}

}  // namespace zwb::constants
