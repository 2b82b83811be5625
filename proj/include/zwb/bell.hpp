#pragma once

// Complete and partial exponential Bell polynomials evaluated at given
// arguments, plus the inversion relation used to convert between constant
// sequences.
//
// All routines are templates over the scalar type T. T must support +, -, *
// and construction from BigInt. With T = Rational evaluation is exact.

#include "zwb/precision.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace zwb::bell {

// Arguments x1..xn of a Bell polynomial, indexed from 1.
template <class T>
class BellInput {
 public:
  BellInput() = default;
  explicit BellInput(std::vector<T> entries) : entries_(std::move(entries)) {}
  BellInput(std::initializer_list<T> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const T& operator()(std::size_t j) const { return entries_.at(j - 1); }
  const std::vector<T>& entries() const { return entries_; }

 private:
  std::vector<T> entries_;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

namespace detail {

inline void require_length(std::size_t have, std::size_t n, const char* who) {
  if (have < n) {
    throw ArgumentError(std::string(who) + ": need " + std::to_string(n) + " arguments, got " +
                        std::to_string(have));
  }
}

template <class T>
T power(const T& base, unsigned e) {
  T result(BigInt(1));
  for (unsigned i = 0; i < e; ++i) result = result * base;
  return result;
}

}  // namespace detail

// Visits every multi-index (k1..kn) with k1 + 2k2 + ... + nkn = n in
// lexicographic order.
void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit);

// Y_n by direct summation over partitions of n.
template <class T>
T complete_partition(const BellInput<T>& x, unsigned n) {
  detail::require_length(x.size(), n, "bell_complete_partition");
  if (n == 0) return T(BigInt(1));
  T total(BigInt(0));
  const BigInt n_fact = factorial(n);
  for_each_partition(n, [&](const std::vector<unsigned>& k) {
    // n! / prod(k_j! (j!)^{k_j}) is the number of set partitions of this block type.
    BigInt denom = 1;
    for (unsigned j = 1; j <= n; ++j) {
      if (k[j - 1] == 0) continue;
      denom *= factorial(k[j - 1]);
      BigInt jf = factorial(j);
      for (unsigned r = 0; r < k[j - 1]; ++r) denom *= jf;
    }
    T term(BigInt(n_fact / denom));
    for (unsigned j = 1; j <= n; ++j) {
      if (k[j - 1] != 0) term = term * detail::power(x(j), k[j - 1]);
    }
    total = total + term;
  });
  return total;
}

// Y_0..Y_n via Y_{m+1} = sum_i C(m,i) Y_{m-i} x_{i+1}.
template <class T>
std::vector<T> complete_recurrence_all(const BellInput<T>& x, unsigned n) {
  detail::require_length(x.size(), n, "bell_complete_recurrence");
  std::vector<T> y;
  y.reserve(n + 1);
  y.emplace_back(BigInt(1));
  for (unsigned m = 0; m < n; ++m) {
    T next(BigInt(0));
    for (unsigned i = 0; i <= m; ++i) {
      next = next + T(binomial(m, i)) * y[m - i] * x(i + 1);
    }
    y.push_back(std::move(next));
  }
  return y;
}

template <class T>
T complete_recurrence(const BellInput<T>& x, unsigned n) {
  return complete_recurrence_all(x, n).back();
}

// Table B[n][k] for 0 <= k <= n <= max_n.
template <class T>
std::vector<std::vector<T>> partial_table(const BellInput<T>& x, unsigned max_n) {
  std::vector<std::vector<T>> table(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    table[n].assign(n + 1, T(BigInt(0)));
  }
  table[0][0] = T(BigInt(1));
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      T sum(BigInt(0));
      for (unsigned i = 1; i <= n - k + 1; ++i) {
        if (table[n - i].size() <= k - 1) continue;
        sum = sum + T(binomial(n - 1, i - 1)) * x(i) * table[n - i][k - 1];
      }
      table[n][k] = std::move(sum);
    }
  }
  return table;
}

// B_{n,k}(x1..x_{n-k+1}).
template <class T>
T partial(unsigned n, unsigned k, const BellInput<T>& x) {
  if (k > n) {
    throw ArgumentError("bell_partial: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  }
  if (n == 0) return T(BigInt(1));
  if (k == 0) return T(BigInt(0));
  detail::require_length(x.size(), n - k + 1, "bell_partial");
  // Only x1..x_{n-k+1} can appear; pad the rest so the table recurrence is total.
  std::vector<T> padded(x.entries().begin(), x.entries().begin() + static_cast<long>(n - k + 1));
  padded.resize(n, T(BigInt(0)));
  return partial_table(BellInput<T>(std::move(padded)), n)[n][k];
}

// y_n = sum_k B_{n,k}(x) = Y_n(x), for n = 1..len(x).
template <class T>
std::vector<T> forward(const BellInput<T>& x) {
  const auto n = static_cast<unsigned>(x.size());
  const auto table = partial_table(x, n);
  std::vector<T> y;
  y.reserve(n);
  for (unsigned m = 1; m <= n; ++m) {
    T sum(BigInt(0));
    for (unsigned k = 1; k <= m; ++k) sum = sum + table[m][k];
    y.push_back(std::move(sum));
  }
  return y;
}

// x_n = sum_k (-1)^{k-1} (k-1)! B_{n,k}(y); inverse of forward().
template <class T>
std::vector<T> invert(const BellInput<T>& y) {
  const auto n = static_cast<unsigned>(y.size());
  if (n == 0) throw ArgumentError("bell_invert: empty input");
  const auto table = partial_table(y, n);
  std::vector<T> x;
  x.reserve(n);
  for (unsigned m = 1; m <= n; ++m) {
    T sum(BigInt(0));
    for (unsigned k = 1; k <= m; ++k) {
      BigInt c = factorial(k - 1);
      if ((k - 1) % 2 == 1) c = -c;
      sum = sum + T(c) * table[m][k];
    }
    x.push_back(std::move(sum));
  }
  return x;
}

}  // namespace zwb::bell
