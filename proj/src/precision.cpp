#include "zwb/precision.hpp"

#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>

namespace zwb {

namespace {

PrecisionConfig& current() {
  static PrecisionConfig config;
  return config;
}

void apply(const PrecisionConfig& config) {
  current() = config;
  ExtReal::default_precision(static_cast<unsigned>(config.working_digits + kGuardDigits));
}

struct DefaultInit {
  DefaultInit() { apply(PrecisionConfig{}); }
};
const DefaultInit default_init;

thread_local std::optional<std::chrono::steady_clock::time_point> tl_deadline;

}  // namespace

void PrecisionConfig::validate() const {
  if (working_digits < 25) {
    throw ArgumentError("working_digits must be >= 25, got " + std::to_string(working_digits));
  }
  if (!(asymptotic_switch >= 10.0)) {
    throw ArgumentError("asymptotic_switch must be >= 10");
  }
  if (em_terms < 1) {
    throw ArgumentError("em_terms must be positive");
  }
}

PrecisionScope::PrecisionScope(const PrecisionConfig& config) : saved_(current()) {
  config.validate();
  apply(config);
}

PrecisionScope::~PrecisionScope() { apply(saved_); }

const PrecisionConfig& precision() { return current(); }

int carried_digits() { return current().working_digits + kGuardDigits; }

ExtReal eps_digits(int extra) {
  return boost::multiprecision::pow(ExtReal(10), -(current().working_digits + extra));
}

ExtReal effective_switch() {
  // The smallest series term, about e^{-2 pi x}, must fall below the
  // truncation threshold 10^-(D+7) times the first term (about 10^-4 or less).
  const double needed = (current().working_digits + 12) * std::log(10.0) / (2.0 * M_PI);
  return ExtReal(std::max(current().asymptotic_switch, std::ceil(needed)));
}

ExtReal ext(const std::string& decimal) { return ExtReal(decimal); }

ExtReal ext_ratio(long num, long den) { return ExtReal(num) / ExtReal(den); }

ExtReal to_ext(const Rational& q) {
  return ExtReal(boost::multiprecision::numerator(q)) / ExtReal(boost::multiprecision::denominator(q));
}

ExtReal pi() { return boost::math::constants::pi<ExtReal>(); }

ExtReal log_two_pi() { return log(2 * pi()); }

std::string to_decimal(const ExtReal& x, int digits) {
  if (digits <= 0) digits = current().working_digits;
  if (x == 0) return "0";
  return x.str(digits, std::ios_base::scientific);
}

DeadlineScope::DeadlineScope(std::chrono::steady_clock::time_point deadline)
    : had_saved_(tl_deadline.has_value()) {
  if (had_saved_) saved_ = *tl_deadline;
  tl_deadline = deadline;
}

DeadlineScope::~DeadlineScope() {
  if (had_saved_) {
    tl_deadline = saved_;
  } else {
    tl_deadline.reset();
  }
}

void check_deadline() {
  if (tl_deadline && std::chrono::steady_clock::now() > *tl_deadline) {
    throw TimeoutError("evaluation exceeded its time budget");
  }
}

}  // namespace zwb
