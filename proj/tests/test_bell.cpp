#include "zwb/bell.hpp"

#include <doctest.h>

#include <random>

using namespace zwb;
using namespace zwb::bell;

namespace {

BellInput<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return BellInput<Rational>(out);
}

BellInput<Rational> random_rationals(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(num(rng), den(rng));
  return BellInput<Rational>(out);
}

// Bell numbers from the Bell triangle; independent of any Bell-polynomial code.
std::vector<BigInt> bell_numbers(unsigned n) {
  std::vector<BigInt> out{BigInt(1)};
  std::vector<BigInt> row{BigInt(1)};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    out.push_back(next.front());
    row = next;
  }
  return out;
}

}  // namespace

TEST_CASE("complete Bell polynomial examples") {
  CHECK(complete_partition(BellInput<Rational>{}, 0) == 1);
  CHECK(complete_partition(ints({3, 4}), 2) == 13);
  CHECK(complete_partition(ints({1, 1, 1, 1, 1, 1}), 6) == 203);
  CHECK(complete_recurrence(ints({1, 1, 1}), 3) == 5);
  CHECK(complete_recurrence(ints({1, 1, 1, 1}), 4) == 15);
  CHECK(complete_recurrence(ints({2, 0, 0, 0, 0}), 5) == 32);
}

TEST_CASE("short input is rejected") {
  CHECK_THROWS_AS(complete_partition(ints({1, 2}), 3), ArgumentError);
  CHECK_THROWS_AS(complete_recurrence(ints({1}), 2), ArgumentError);
  CHECK_THROWS_AS(partial(2, 3, ints({1, 1})), ArgumentError);
  CHECK_THROWS_AS(invert(BellInput<Rational>{}), ArgumentError);
}

TEST_CASE("partial Bell polynomial examples") {
  CHECK(partial(0, 0, BellInput<Rational>{}) == 1);
  CHECK(partial(3, 2, ints({1, 1})) == 3);
  Rational sum(0);
  for (unsigned k = 1; k <= 4; ++k) sum += partial(4, k, ints({1, 1, 1, 1}));
  CHECK(sum == 15);
  // B_{4,2} = 4 x1 x3 + 3 x2^2
  CHECK(partial(4, 2, ints({2, 3, 5})) == 4 * 2 * 5 + 3 * 9);
}

TEST_CASE("partial Bell rows sum to the complete polynomial") {
  std::mt19937_64 rng(7);
  for (unsigned n = 1; n <= 9; ++n) {
    const auto x = random_rationals(rng, n);
    Rational sum(0);
    for (unsigned k = 1; k <= n; ++k) sum += partial(n, k, x);
    CHECK(sum == complete_partition(x, n));
  }
}

TEST_CASE("inversion round trips") {
  CHECK(invert(ints({7})) == std::vector<Rational>{Rational(7)});
  const auto y = ints({1, 2, 3});
  CHECK(forward(BellInput<Rational>(invert(y))) == y.entries());
  const auto x = ints({5, -1, 7});
  CHECK(invert(BellInput<Rational>(forward(x))) == x.entries());
  std::mt19937_64 rng(11);
  const auto r = random_rationals(rng, 10);
  CHECK(forward(BellInput<Rational>(invert(r))) == r.entries());
}

TEST_CASE("partition and recurrence agree on random rationals") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_rationals(rng, 12);
    const unsigned n = static_cast<unsigned>(trial % 13);
    CHECK(complete_partition(x, n) == complete_recurrence(x, n));
  }
}

TEST_CASE("parity identity") {
  std::mt19937_64 rng(3);
  for (unsigned n = 0; n <= 10; ++n) {
    const auto x = random_rationals(rng, n);
    std::vector<Rational> flipped = x.entries();
    for (std::size_t j = 0; j < flipped.size(); ++j) {
      if ((j + 1) % 2 == 1) flipped[j] = -flipped[j];
    }
    const Rational lhs = complete_recurrence(BellInput<Rational>(flipped), n);
    const Rational rhs = complete_recurrence(x, n);
    CHECK(lhs == (n % 2 == 0 ? rhs : Rational(-rhs)));
  }
}

TEST_CASE("binomial convolution") {
  std::mt19937_64 rng(5);
  for (unsigned n = 0; n <= 8; ++n) {
    const auto x = random_rationals(rng, n);
    const auto y = random_rationals(rng, n);
    std::vector<Rational> sum;
    for (unsigned j = 0; j < n; ++j) sum.push_back(x.entries()[j] + y.entries()[j]);
    const auto yx = complete_recurrence_all(x, n);
    const auto yy = complete_recurrence_all(y, n);
    Rational rhs(0);
    for (unsigned i = 0; i <= n; ++i) rhs += Rational(binomial(n, i)) * yy[i] * yx[n - i];
    CHECK(complete_partition(BellInput<Rational>(sum), n) == rhs);
  }
}

TEST_CASE("integer inputs give integers and all-ones gives Bell numbers") {
  const auto bells = bell_numbers(12);
  std::vector<Rational> ones(12, Rational(1));
  for (unsigned n = 0; n <= 12; ++n) {
    const Rational v = complete_partition(BellInput<Rational>(ones), n);
    CHECK(boost::multiprecision::denominator(v) == 1);
    CHECK(v == Rational(bells[n]));
  }
  CHECK(bells[12] == 4213597);
}
