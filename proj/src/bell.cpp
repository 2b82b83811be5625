#include "zwb/bell.hpp"

#include <mutex>

namespace zwb::bell {

BigInt factorial(unsigned n) {
  static std::mutex mutex;
  static std::vector<BigInt> cache{BigInt(1)};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    cache.push_back(cache.back() * BigInt(cache.size()));
  }
  return cache[n];
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

namespace {

void enumerate(unsigned j, unsigned n, unsigned remaining, std::vector<unsigned>& k,
               const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (j > n) {
    if (remaining == 0) visit(k);
    return;
  }
  for (unsigned count = 0; count * j <= remaining; ++count) {
    k[j - 1] = count;
    enumerate(j + 1, n, remaining - count * j, k, visit);
  }
  k[j - 1] = 0;
}

}  // namespace

void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> k(n, 0);
  enumerate(1, n, n, k, visit);
}

}  // namespace zwb::bell
