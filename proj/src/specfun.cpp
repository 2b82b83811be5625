#include "zwb/specfun.hpp"

#include "zwb/bell.hpp"

#include <boost/math/special_functions/expm1.hpp>

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace zwb::specfun {

namespace {

std::mutex bernoulli_mutex;

const std::vector<Rational>& bernoulli_table(unsigned n) {
  static std::vector<Rational> table{Rational(1)};
  // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rational sum(0);
    BigInt c(1);  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      sum += Rational(c) * table[k];
      c = c * (m + 1 - k) / (k + 1);
    }
    table.push_back(-sum / Rational(m + 1));
  }
  return table;
}

struct EvenTable {
  int digits;
  std::unique_ptr<std::vector<ExtReal>> values;
};

ExtReal series_floor() { return eps_digits(7); }

// sum_{k>=1} B_{2k} * weight(k) / x^{2k + offset} until terms drop below
// series_floor() relative to the first term.
template <class Weight>
ExtReal bernoulli_series(const ExtReal& x, int offset, Weight&& weight, std::size_t max_terms = 400) {
  const auto& b = bernoulli_even(max_terms + 1);
  const ExtReal inv2 = 1 / (x * x);
  ExtReal xp = pow(x, -(2 + offset));
  ExtReal total(0);
  ExtReal first(0);
  ExtReal last_mag(0);
  int growth = 0;
  const ExtReal floor = series_floor();
  for (std::size_t k = 1; k <= max_terms; ++k) {
    const ExtReal term = b[k] * weight(static_cast<long>(k)) * xp;
    const ExtReal mag = abs(term);
    if (k == 1) {
      first = mag;
    } else if (mag > last_mag) {
      if (++growth >= 2) throw ConvergenceError("asymptotic series diverged before reaching precision");
    } else {
      growth = 0;
    }
    total += term;
    if (mag <= floor * first) return total;
    last_mag = mag;
    xp *= inv2;
  }
  throw ConvergenceError("asymptotic series did not reach precision");
}

void require_positive(const ExtReal& u, const char* who) {
  if (!(u > 0)) throw DomainError(std::string(who) + " requires a positive argument");
}

// Smallest m >= 0 with u + m >= effective_switch() + extra.
long shift_count(const ExtReal& u, int extra = 0) {
  const ExtReal sw = effective_switch() + extra;
  if (u >= sw) return 0;
  return static_cast<long>(ceil(sw - u).convert_to<double>());
}

}  // namespace

const Rational& bernoulli(unsigned n) {
  std::lock_guard lock(bernoulli_mutex);
  return bernoulli_table(n)[n];
}

const std::vector<ExtReal>& bernoulli_even(std::size_t count) {
  static std::mutex mutex;
  // Older, shorter tables stay alive so references handed out remain valid.
  static std::vector<EvenTable> tables;
  std::lock_guard lock(mutex);
  const int digits = carried_digits();
  const std::vector<ExtReal>* best = nullptr;
  for (const auto& t : tables) {
    if (t.digits == digits && t.values->size() >= count && (!best || t.values->size() > best->size())) {
      best = t.values.get();
    }
  }
  if (best) return *best;
  const std::size_t size = std::max<std::size_t>(count, 160);
  auto values = std::make_unique<std::vector<ExtReal>>();
  values->reserve(size);
  {
    std::lock_guard exact_lock(bernoulli_mutex);
    const auto& exact = bernoulli_table(static_cast<unsigned>(2 * (size - 1)));
    for (std::size_t k = 0; k < size; ++k) values->push_back(to_ext(exact[2 * k]));
  }
  tables.push_back({digits, std::move(values)});
  return *tables.back().values;
}

std::vector<ExtReal> digamma_remainder_series(std::size_t terms) {
  const auto& b = bernoulli_even(terms / 2 + 1);
  std::vector<ExtReal> c(terms, ExtReal(0));
  for (std::size_t n = 2; n < terms; n += 2) c[n] = -b[n / 2] / static_cast<long>(n);
  return c;
}

std::vector<ExtReal> trigamma_remainder_series(std::size_t terms) {
  const auto& b = bernoulli_even(terms / 2 + 1);
  std::vector<ExtReal> c(terms, ExtReal(0));
  for (std::size_t n = 3; n < terms; n += 2) c[n] = b[(n - 1) / 2];
  return c;
}

ExtReal digamma_remainder(const ExtReal& x) {
  require_positive(x, "digamma");
  const long m = shift_count(x);
  if (m == 0) {
    return bernoulli_series(x, 0, [](long k) { return ExtReal(-1) / (2 * k); });
  }
  // psi(x) = psi(x+m) - sum_{j<m} 1/(x+j)
  const ExtReal big = x + m;
  ExtReal value = digamma_remainder(big) + log(big) - 1 / (2 * big);
  for (long j = 0; j < m; ++j) value -= 1 / (x + j);
  return value - log(x) + 1 / (2 * x);
}

ExtReal digamma(const ExtReal& u) {
  require_positive(u, "digamma");
  const long m = shift_count(u);
  const ExtReal big = u + m;
  ExtReal value = log(big) - 1 / (2 * big) + digamma_remainder(big);
  for (long j = 0; j < m; ++j) value -= 1 / (u + j);
  return value;
}

ExtReal trigamma_remainder(const ExtReal& x) {
  require_positive(x, "trigamma");
  const long m = shift_count(x);
  if (m == 0) return bernoulli_series(x, 1, [](long) { return ExtReal(1); });
  // psi'(x) = psi'(x+m) + sum_{j<m} 1/(x+j)^2
  const ExtReal big = x + m;
  ExtReal value = trigamma_remainder(big) + 1 / big + 1 / (2 * big * big);
  for (long j = 0; j < m; ++j) {
    const ExtReal v = x + j;
    value += 1 / (v * v);
  }
  return value - 1 / x - 1 / (2 * x * x);
}

ExtReal trigamma_minus_inverse(const ExtReal& x) { return trigamma_remainder(x) + 1 / (2 * x * x); }

ExtReal polygamma(int r, const ExtReal& u) {
  if (r < 1) throw ArgumentError("polygamma order must be >= 1");
  require_positive(u, "polygamma");
  if (r == 1) return trigamma_minus_inverse(u) + 1 / u;
  // higher orders start the series further out
  const long m = shift_count(u, r);
  const ExtReal x = u + m;
  const ExtReal r_fact = ExtReal(bell::factorial(static_cast<unsigned>(r)));
  const ExtReal rm1_fact = r_fact / r;
  // weight (2k + r - 1)! / (2k)!
  ExtReal series = bernoulli_series(x, r, [r](long k) {
    ExtReal w(1);
    for (long i = 2 * k + 1; i <= 2 * k + r - 1; ++i) w *= i;
    return w;
  });
  ExtReal value = rm1_fact / pow(x, r) + r_fact / (2 * pow(x, r + 1)) + series;
  if (r % 2 == 0) value = -value;
  // psi^(r)(u) = psi^(r)(u+m) - (-1)^r r! sum_{j<m} (u+j)^{-(r+1)}
  ExtReal correction(0);
  for (long j = 0; j < m; ++j) correction += pow(u + j, -(r + 1));
  correction *= r_fact;
  return r % 2 == 0 ? value - correction : value + correction;
}

ExtReal log_gamma_stirling(const ExtReal& u) {
  require_positive(u, "log_gamma");
  const long m = shift_count(u);
  const ExtReal x = u + m;
  ExtReal value = (x - ExtReal(1) / 2) * log(x) - x + log_two_pi() / 2;
  value += bernoulli_series(x, -1, [](long k) { return 1 / ExtReal(2 * k * (2 * k - 1)); });
  ExtReal product(1);
  for (long j = 0; j < m; ++j) product *= u + j;
  return value - log(product);
}

ExtReal bose(const ExtReal& y) {
  require_positive(y, "bose");
  if (y < 1) return 1 / boost::math::expm1(y);
  const ExtReal e = exp(-y);
  return e / (1 - e);
}

ExtReal bose_regular(const ExtReal& y) {
  require_positive(y, "bose");
  if (y >= 1) return bose(y) - 1 / y;
  // -1/2 + sum_k B_{2k} y^{2k-1} / (2k)!, radius 2 pi
  const auto& b = bernoulli_even(200);
  ExtReal total = ExtReal(-1) / 2;
  ExtReal p = y;
  ExtReal fact(2);
  const ExtReal floor = eps_digits(10);
  const ExtReal y2 = y * y;
  for (std::size_t k = 1; k < b.size(); ++k) {
    const ExtReal term = b[k] * p / fact;
    total += term;
    if (abs(term) < floor) return total;
    p *= y2;
    fact *= ExtReal(2 * k + 1) * (2 * k + 2);
  }
  throw ConvergenceError("bose series did not converge");
}

ExtReal fermi(const ExtReal& y) {
  require_positive(y, "fermi");
  const ExtReal e = exp(-y);
  return e / (1 + e);
}

ExtReal hurwitz_em(const ExtReal& s, const ExtReal& u) {
  if (s == 1) throw PoleError("zeta has a pole at s = 1");
  require_positive(u, "hurwitz_em");
  const int terms = precision().em_terms;
  const auto& b = bernoulli_even(static_cast<std::size_t>(terms) + 2);
  const ExtReal target = eps_digits(5);

  // (s)_{2j-1} B_{2j} / (2j)! for j = 1..terms+1
  std::vector<ExtReal> coeff;
  ExtReal rising = s;  // (s)_1
  ExtReal fact(2);     // (2j)!
  for (int j = 1; j <= terms + 1; ++j) {
    coeff.push_back(b[static_cast<std::size_t>(j)] * rising / fact);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= ExtReal(2 * j + 1) * (2 * j + 2);
  }

  long n = 16;
  for (;; n *= 2) {
    if (n > (1L << 22)) throw ConvergenceError("Euler-Maclaurin summation needs too many terms");
    const ExtReal x = u + n;
    const ExtReal next = abs(coeff.back() * pow(x, -s - 2 * terms - 1));
    if (next < target) break;
  }
  const ExtReal x = u + n;
  ExtReal sum(0);
  for (long k = 0; k < n; ++k) {
    if ((k & 1023) == 0) check_deadline();
    sum += pow(u + k, -s);
  }
  sum += pow(x, 1 - s) / (s - 1) + pow(x, -s) / 2;
  const ExtReal inv2 = 1 / (x * x);
  ExtReal xp = pow(x, -s - 1);
  for (int j = 1; j <= terms; ++j) {
    const ExtReal term = coeff[static_cast<std::size_t>(j - 1)] * xp;
    sum += term;
    if (abs(term) < target) break;
    xp *= inv2;
  }
  return sum;
}

ExtReal zeta_em(const ExtReal& s) {
  static std::mutex mutex;
  static std::map<std::pair<int, ExtReal>, ExtReal> cache;
  const auto key = std::make_pair(carried_digits(), s);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ExtReal value = hurwitz_em(s, ExtReal(1));
  std::lock_guard lock(mutex);
  if (cache.size() > 4096) cache.clear();
  cache.emplace(key, value);
  return value;
}

quad::QuadResult hurwitz_hermite_integral(const ExtReal& s, const ExtReal& u, const ExtReal& tol) {
  const ExtReal two_pi = 2 * pi();
  const ExtReal u2 = u * u;
  auto f = [&](const ExtReal& x) {
    return sin(s * atan(x / u)) * pow(u2 + x * x, -s / 2) * bose(two_pi * x);
  };
  return quad::integrate(f, quad::Domain::semi_infinite(ExtReal(0), quad::Decay::exponential), tol / 2);
}

ExtReal hurwitz_hermite(const ExtReal& s, const ExtReal& u, const ExtReal& tol) {
  if (s == 1) throw PoleError("zeta has a pole at s = 1");
  require_positive(u, "hurwitz_hermite");
  const quad::QuadResult r = hurwitz_hermite_integral(s, u, tol);
  if (!r.converged) throw ConvergenceError("Hermite integral did not converge");
  return pow(u, -s) / 2 + pow(u, 1 - s) / (s - 1) + 2 * r.value;
}

ExtReal log_gamma_binet(const ExtReal& u, const ExtReal& tol) {
  require_positive(u, "log_gamma_binet");
  const ExtReal two_pi = 2 * pi();
  auto f = [&](const ExtReal& x) { return atan(x / u) * bose(two_pi * x); };
  const quad::QuadResult r =
      quad::integrate(f, quad::Domain::semi_infinite(ExtReal(0), quad::Decay::exponential), tol / 2);
  if (!r.converged) throw ConvergenceError("Binet integral did not converge");
  return (u - ExtReal(1) / 2) * log(u) - u + log_two_pi() / 2 + 2 * r.value;
}

namespace {

// All gamma_0..gamma_12 from one pass over k = 1..N.
std::array<ExtReal, kStieltjesMax + 1> stieltjes_all(long terms) {
  constexpr int kMax = kStieltjesMax;
  std::array<ExtReal, kMax + 1> sums;
  sums.fill(ExtReal(0));
  for (long k = 2; k <= terms; ++k) {
    if ((k & 1023) == 0) check_deadline();
    const ExtReal lk = log(ExtReal(k));
    ExtReal p = 1 / ExtReal(k);
    for (int n = 0; n <= kMax; ++n) {
      sums[static_cast<std::size_t>(n)] += p;
      p *= lk;
    }
  }
  sums[0] += 1;  // k = 1 contributes only to n = 0

  const ExtReal big(terms);
  const ExtReal lg = log(big);
  const int em = precision().em_terms;
  const auto& b = bernoulli_even(static_cast<std::size_t>(em) + 1);
  std::array<ExtReal, kMax + 1> out;
  for (int n = 0; n <= kMax; ++n) {
    // f^{(r)}(x) = x^{-1-r} P_r(log x), P_0 = L^n, P_{r+1} = -(r+1) P_r + P_r'
    std::vector<ExtReal> poly(static_cast<std::size_t>(n) + 1, ExtReal(0));
    poly[static_cast<std::size_t>(n)] = 1;
    auto eval = [&](const std::vector<ExtReal>& p) {
      ExtReal v(0);
      for (std::size_t i = p.size(); i-- > 0;) v = v * lg + p[i];
      return v;
    };
    auto step = [&](std::vector<ExtReal>& p, int r) {
      std::vector<ExtReal> next(p.size(), ExtReal(0));
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i] -= (r + 1) * p[i];
        if (i > 0) next[i - 1] += static_cast<long>(i) * p[i];
      }
      p = std::move(next);
    };
    ExtReal value = sums[static_cast<std::size_t>(n)] - pow(lg, n + 1) / (n + 1) - eval(poly) / (2 * big);
    ExtReal fact(1);  // (2j)!
    int r = 0;
    for (int j = 1; j <= em; ++j) {
      while (r < 2 * j - 1) step(poly, r++);
      fact *= ExtReal(2 * j - 1) * (2 * j);
      value -= b[static_cast<std::size_t>(j)] / fact * eval(poly) * pow(big, -2 * j);
    }
    out[static_cast<std::size_t>(n)] = value;
  }
  return out;
}

struct StieltjesCache {
  std::array<ExtReal, kStieltjesMax + 1> value;
  std::array<ExtReal, kStieltjesMax + 1> err;
};

const StieltjesCache& stieltjes_cache() {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<StieltjesCache>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[carried_digits()];
  if (!slot) {
    auto entry = std::make_unique<StieltjesCache>();
    entry->value = stieltjes_all(kStieltjesTerms);
    const auto finer = stieltjes_all(2 * kStieltjesTerms);
    for (std::size_t n = 0; n < entry->value.size(); ++n) entry->err[n] = abs(entry->value[n] - finer[n]);
    slot = std::move(entry);
  }
  return *slot;
}

void require_stieltjes_index(int n) {
  if (n < 0 || n > kStieltjesMax) {
    throw ArgumentError("Stieltjes oracle supports 0 <= n <= " + std::to_string(kStieltjesMax));
  }
}

}  // namespace

ExtReal stieltjes_oracle_at(int n, long terms) {
  require_stieltjes_index(n);
  if (terms < 2) throw ArgumentError("Stieltjes oracle needs at least 2 terms");
  return stieltjes_all(terms)[static_cast<std::size_t>(n)];
}

ExtReal stieltjes_oracle(int n) {
  require_stieltjes_index(n);
  return stieltjes_cache().value[static_cast<std::size_t>(n)];
}

ExtReal stieltjes_oracle_err(int n) {
  require_stieltjes_index(n);
  return stieltjes_cache().err[static_cast<std::size_t>(n)];
}

ExtReal euler_gamma() { return stieltjes_oracle(0); }

}  // namespace zwb::specfun
