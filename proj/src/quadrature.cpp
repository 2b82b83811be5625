#include "zwb/quadrature.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace zwb::quad {

namespace {

constexpr int kTMax = 7;
constexpr int kMinLevel = 3;
constexpr int kSmallRun = 3;

thread_local std::size_t tl_evaluations = 0;

enum class Map { tanh_sinh, exp_sinh };

struct Node {
  ExtReal t;
  // tanh-sinh: distance from the nearer endpoint of [-1, 1] mapped to [0, 1]
  //            scale, i.e. 1 / (1 + e^{2 nu}); exp-sinh: e^{nu}.
  ExtReal abscissa;
  ExtReal weight;
};

struct NodeSet {
  std::optional<Node> center;
  std::vector<Node> pos;  // t > 0, increasing
  std::vector<Node> neg;  // t < 0, decreasing (exp-sinh only)
};

Node make_node(Map map, const ExtReal& t) {
  const ExtReal half_pi = pi() / 2;
  const ExtReal nu = half_pi * sinh(t);
  Node node{t, ExtReal(0), ExtReal(0)};
  if (map == Map::tanh_sinh) {
    const ExtReal c = cosh(nu);
    node.abscissa = 1 / (1 + exp(2 * abs(nu)));
    node.weight = half_pi * cosh(t) / (c * c);
  } else {
    const ExtReal e = exp(nu);
    node.abscissa = e;
    node.weight = half_pi * cosh(t) * e;
  }
  return node;
}

const NodeSet& nodes(Map map, int level) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<NodeSet>> cache;
  const auto key = std::make_tuple(carried_digits(), static_cast<int>(map), level);
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  auto set = std::make_unique<NodeSet>();
  const long steps = 1L << level;
  const ExtReal h = ExtReal(1) / steps;
  if (level == 0) set->center = make_node(map, ExtReal(0));
  for (long j = 1; j <= kTMax * steps; ++j) {
    if (level > 0 && j % 2 == 0) continue;
    const ExtReal t = h * j;
    set->pos.push_back(make_node(map, t));
    if (map == Map::exp_sinh) set->neg.push_back(make_node(map, -t));
  }
  return *cache.emplace(key, std::move(set)).first->second;
}

void require_finite(const ExtReal& v, const ExtReal& x) {
  if (!boost::multiprecision::isfinite(v)) {
    throw IntegrandError("non-finite integrand value at x = " + to_decimal(x, 20), x);
  }
}

struct LevelDriver {
  ExtReal tol;
  ExtReal cutoff;

  // The truncation cutoff is independent of tol so that a tighter tol only adds levels.
  explicit LevelDriver(const ExtReal& tolerance) : tol(tolerance), cutoff(eps_digits(10)) {}

  // Runs successive halvings of the step; `level_sum(level)` returns the
  // contribution of the nodes first introduced at that level.
  template <class LevelSum>
  QuadResult run(LevelSum&& level_sum) {
    QuadResult result;
    ExtReal sum(0);
    ExtReal previous(0);
    for (int level = 0; level <= kLevelCap; ++level) {
      sum += level_sum(level, result.evaluations);
      const ExtReal estimate = sum / (1L << level);
      if (level > 0) {
        result.err_estimate = abs(estimate - previous);
        result.value = estimate;
        if (level >= kMinLevel && result.err_estimate <= tol) {
          result.converged = true;
          tl_evaluations += result.evaluations;
          return result;
        }
      }
      previous = estimate;
    }
    result.value = previous;
    tl_evaluations += result.evaluations;
    return result;
  }
};

// Walks one side of the node list, stopping once the weighted terms have been
// negligible for a few consecutive nodes.
template <class Term>
ExtReal walk(const std::vector<Node>& side, const ExtReal& cutoff, std::size_t& evaluations, Term&& term) {
  ExtReal total(0);
  int small = 0;
  std::size_t count = 0;
  for (const Node& node : side) {
    if ((++count & 63U) == 0) check_deadline();
    std::optional<ExtReal> v = term(node);
    if (!v) continue;
    ++evaluations;
    total += *v;
    if (abs(*v) < cutoff) {
      if (++small >= kSmallRun && abs(node.t) >= 1) break;
    } else {
      small = 0;
    }
  }
  return total;
}

QuadResult tanh_sinh(const ComplementIntegrand& f, const ExtReal& a, const ExtReal& b, const ExtReal& tol,
                     bool pass_endpoints) {
  const ExtReal width = b - a;
  const ExtReal half = width / 2;
  LevelDriver driver(tol);
  return driver.run([&](int level, std::size_t& evaluations) {
    check_deadline();
    const NodeSet& set = nodes(Map::tanh_sinh, level);
    ExtReal contribution(0);
    if (set.center) {
      const ExtReal x = a + half;
      const ExtReal v = set.center->weight * half * f(x, half);
      require_finite(v, x);
      ++evaluations;
      contribution += v;
    }
    auto right = [&](const Node& node) -> std::optional<ExtReal> {
      const ExtReal dr = width * node.abscissa;
      const ExtReal x = b - dr;
      if (!pass_endpoints && x >= b) return std::nullopt;
      const ExtReal v = node.weight * half * f(x, dr);
      require_finite(v, x);
      return v;
    };
    auto left = [&](const Node& node) -> std::optional<ExtReal> {
      const ExtReal dl = width * node.abscissa;
      const ExtReal x = a + dl;
      if (!pass_endpoints && x <= a) return std::nullopt;
      const ExtReal v = node.weight * half * f(x, width - dl);
      require_finite(v, x);
      return v;
    };
    contribution += walk(set.pos, driver.cutoff, evaluations, right);
    contribution += walk(set.pos, driver.cutoff, evaluations, left);
    return contribution;
  });
}

QuadResult exp_sinh(const Integrand& f, const ExtReal& a, const ExtReal& tol) {
  LevelDriver driver(tol);
  return driver.run([&](int level, std::size_t& evaluations) {
    check_deadline();
    const NodeSet& set = nodes(Map::exp_sinh, level);
    ExtReal contribution(0);
    auto term = [&](const Node& node) -> std::optional<ExtReal> {
      const ExtReal x = a + node.abscissa;
      if (x <= a) return std::nullopt;
      const ExtReal v = node.weight * f(x);
      require_finite(v, x);
      return v;
    };
    if (set.center) {
      contribution += *term(*set.center);
      ++evaluations;
    }
    contribution += walk(set.pos, driver.cutoff, evaluations, term);
    contribution += walk(set.neg, driver.cutoff, evaluations, term);
    return contribution;
  });
}

ComplementIntegrand ignore_complement(const Integrand& f) {
  return [&f](const ExtReal& x, const ExtReal&) { return f(x); };
}

// Tail of [start, inf) for an algebraically decaying integrand, mapped by u = start / t.
QuadResult algebraic_tail(const Integrand& f, const ExtReal& start, const ExtReal& tol) {
  return tanh_sinh(
      [&](const ExtReal& t, const ExtReal&) { return f(start / t) * start / (t * t); }, ExtReal(0), ExtReal(1),
      tol, false);
}

}  // namespace

std::size_t evaluation_count() { return tl_evaluations; }
void charge_evaluations(std::size_t n) { tl_evaluations += n; }

QuadResult& QuadResult::operator+=(const QuadResult& other) {
  value += other.value;
  err_estimate += other.err_estimate;
  evaluations += other.evaluations;
  converged = converged && other.converged;
  return *this;
}

Domain Domain::finite(ExtReal a, ExtReal b, int left_log_power) {
  Domain d;
  d.kind = Kind::finite;
  d.a = std::move(a);
  d.b = std::move(b);
  d.left_log_power = left_log_power;
  return d;
}

Domain Domain::semi_infinite(ExtReal a, Decay decay, double decay_power) {
  Domain d;
  d.kind = Kind::semi_infinite;
  d.a = std::move(a);
  d.decay = decay;
  d.decay_power = decay_power;
  return d;
}

void Domain::validate() const {
  if (kind == Kind::finite) {
    if (!(a < b)) throw ArgumentError("finite domain requires a < b");
  } else {
    if (a < 0) throw ArgumentError("semi-infinite domain requires a >= 0");
    if (decay == Decay::algebraic && !(decay_power > 1.0)) {
      throw ArgumentError("algebraic decay requires power > 1");
    }
  }
  if (left_log_power < 0) throw ArgumentError("log power must be non-negative");
}

ExtReal default_tol() { return eps_digits(-15); }

QuadResult integrate(const ComplementIntegrand& f, const Domain& d, const ExtReal& tol) {
  d.validate();
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");
  if (d.kind == Domain::Kind::finite) return tanh_sinh(f, d.a, d.b, tol, true);
  return integrate([&f](const ExtReal& x) { return f(x, ExtReal(0)); }, d, tol);
}

QuadResult integrate(const Integrand& f, const Domain& d, const ExtReal& tol) {
  d.validate();
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");
  if (d.kind == Domain::Kind::finite) return tanh_sinh(ignore_complement(f), d.a, d.b, tol, false);

  const ExtReal one(1);
  QuadResult total;
  total.converged = true;
  ExtReal start = d.a;
  if (d.a < one) {
    total += tanh_sinh(ignore_complement(f), d.a, one, tol / 2, false);
    start = one;
  }
  if (d.decay == Decay::algebraic) {
    total += algebraic_tail(f, start, tol / 2);
  } else {
    total += exp_sinh(f, start, tol / 2);
  }
  return total;
}

ExtReal AsymptoticTail::integrate_tail(int k) const {
  const ExtReal log_cut = log(cutoff);
  ExtReal total(0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    const ExtReal q = ExtReal(static_cast<long>(j)) + shift - 1;
    if (!(q > 0)) throw ArgumentError("asymptotic tail term is not integrable");
    // int_U^inf u^{-(q+1)} log^k u du = U^{-q} sum_i k!/(k-i)! L^{k-i} / q^{i+1}
    ExtReal inner(0);
    ExtReal falling(1);
    for (int i = 0; i <= k; ++i) {
      inner += falling * pow(log_cut, k - i) / pow(q, i + 1);
      falling *= (k - i);
    }
    total += coeffs[j] * pow(cutoff, -q) * inner;
  }
  return total;
}

std::vector<ExtReal> shift_inverse_powers(const std::vector<ExtReal>& c, const ExtReal& offset, std::size_t terms) {
  std::vector<ExtReal> d(terms, ExtReal(0));
  if (!c.empty() && terms > 0) d[0] = c[0];
  for (std::size_t m = 1; m < terms; ++m) {
    // x^{-n} = sum_i C(n+i-1, i) (-offset)^i t^{-n-i}
    ExtReal binom(1);  // C(m-1, m-n), built as n decreases from m
    ExtReal acc(0);
    ExtReal neg_pow(1);
    for (std::size_t n = m; n >= 1; --n) {
      if (n < c.size()) acc += c[n] * binom * neg_pow;
      // advance to n-1: C(m-1, m-n+1) = C(m-1, m-n) * (n-1) / (m-n+1)
      binom = binom * ExtReal(static_cast<long>(n - 1)) / ExtReal(static_cast<long>(m - n + 1));
      neg_pow *= -offset;
    }
    d[m] = acc;
  }
  return d;
}

QuadResult integrate_with_log_weight(const Integrand& f, int k, const ExtReal& tol,
                                     const std::optional<AsymptoticTail>& tail) {
  if (k < 0) throw ArgumentError("log weight power must be non-negative");
  if (!(tol > 0)) throw ArgumentError("tolerance must be positive");
  const ExtReal zero(0);
  const ExtReal one(1);

  auto head_integrand = [&](const ExtReal& u, const ExtReal&) {
    return k == 0 ? f(u) : f(u) * pow(log(u), k);
  };
  QuadResult total = tanh_sinh(head_integrand, zero, one, tol / 2, false);

  auto mapped = [&](const ExtReal& t, const ExtReal&) {
    const ExtReal u = 1 / t;
    const ExtReal base = f(u) / (t * t);
    return k == 0 ? base : base * pow(-log(t), k);
  };
  QuadResult mapped_tail = tanh_sinh(mapped, zero, one, tol / 2, false);
  if (tail && (!mapped_tail.converged || mapped_tail.err_estimate > tol / 2)) {
    QuadResult near = tanh_sinh(mapped, 1 / tail->cutoff, one, tol / 2, false);
    near.value += tail->integrate_tail(k);
    mapped_tail = near;
  }
  total += mapped_tail;
  return total;
}

AlgebraicPair log_weighted_algebraic(const ExtReal& s, const ExtReal& x, const ExtReal& tol) {
  if (!(abs(s) < 1)) throw DomainError("log_weighted_algebraic requires |s| < 1");
  if (!(x > 0)) throw DomainError("log_weighted_algebraic requires x > 0");
  const ExtReal x2 = x * x;
  auto f = [&](const ExtReal& u) { return pow(u, -s) / (x2 + u * u); };
  AsymptoticTail tail;
  tail.shift = s;
  // u^{-s} / (x^2 + u^2) = u^{-s-2} sum_m (-x^2)^m u^{-2m}
  tail.coeffs.assign(24, ExtReal(0));
  ExtReal term(1);
  for (std::size_t j = 2; j < tail.coeffs.size(); j += 2) {
    tail.coeffs[j] = term;
    term *= -x2;
  }
  AlgebraicPair out;
  out.plain = integrate_with_log_weight(f, 0, tol, tail);
  out.logged = integrate_with_log_weight(f, 1, tol, tail);
  return out;
}

}  // namespace zwb::quad
