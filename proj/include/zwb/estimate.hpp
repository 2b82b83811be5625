#pragma once

// A value carrying a first-order absolute error bound. Arithmetic propagates
// the bound, so formulas written once (e.g. Bell polynomials) report how much
// of the input uncertainty reaches the output.

#include "zwb/precision.hpp"

namespace zwb {

struct Estimate {
  ExtReal value{0};
  ExtReal err{0};

  Estimate() = default;
  Estimate(ExtReal v, ExtReal e) : value(std::move(v)), err(abs(e)) {}
  explicit Estimate(const ExtReal& v) : value(v), err(0) {}
  explicit Estimate(const BigInt& n) : value(ExtReal(n)), err(0) {}

  static Estimate exact(const ExtReal& v) { return Estimate(v, ExtReal(0)); }
};

inline Estimate operator+(const Estimate& a, const Estimate& b) {
  return {a.value + b.value, a.err + b.err};
}
inline Estimate operator-(const Estimate& a, const Estimate& b) {
  return {a.value - b.value, a.err + b.err};
}
inline Estimate operator-(const Estimate& a) { return {-a.value, a.err}; }
inline Estimate operator*(const Estimate& a, const Estimate& b) {
  return {a.value * b.value, abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err};
}
inline Estimate operator*(const ExtReal& s, const Estimate& a) { return {s * a.value, abs(s) * a.err}; }
inline Estimate operator*(const Estimate& a, const ExtReal& s) { return s * a; }
inline Estimate operator/(const Estimate& a, const ExtReal& s) { return {a.value / s, a.err / abs(s)}; }

}  // namespace zwb
