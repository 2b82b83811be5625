#pragma once

// Extended-precision scalar, working-precision configuration and the error
// types shared by every module.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zwb {

using ExtReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrecisionConfig {
  int working_digits = 40;
  double asymptotic_switch = 20.0;
  int em_terms = 8;

  // Throws ArgumentError when an invariant is violated.
  void validate() const;
  friend bool operator==(const PrecisionConfig&, const PrecisionConfig&) = default;
};

// Extra decimal digits carried by ExtReal beyond working_digits.
inline constexpr int kGuardDigits = 12;

// Working precision is process-wide: the MPFR default precision used by
// every ExtReal constructed after the scope is entered. Scopes nest and
// restore the previous configuration on exit. Changing precision while
// another thread is computing is not supported.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionConfig& config);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  PrecisionConfig saved_;
};

const PrecisionConfig& precision();

// Decimal digits actually carried by ExtReal (working_digits + guard).
int carried_digits();

// 10^-(working_digits + extra)
ExtReal eps_digits(int extra = 0);

// Threshold below which asymptotic expansions are replaced by recurrence;
// raised automatically when working_digits demands it.
ExtReal effective_switch();

ExtReal ext(const std::string& decimal);
ExtReal ext_ratio(long num, long den);
ExtReal to_ext(const Rational& q);

ExtReal pi();
ExtReal log_two_pi();

// Scientific decimal string with `digits` significant digits (default: working_digits).
std::string to_decimal(const ExtReal& x, int digits = 0);

// Cooperative per-thread deadline, polled by long-running loops.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::chrono::steady_clock::time_point deadline);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::chrono::steady_clock::time_point saved_;
  bool had_saved_;
};

// Throws TimeoutError if the calling thread's deadline has passed.
void check_deadline();

}  // namespace zwb
