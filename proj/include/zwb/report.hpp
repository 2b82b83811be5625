#pragma once

// Runs a suite of catalog identities and structural checks on a worker pool
// and renders the verification report.

#include "zwb/precision.hpp"

#include <string>
#include <vector>

namespace zwb::report {

// A resolved --suite selector.
struct Suite {
  std::string name;
  std::vector<std::string> ids;  // catalog ids (aliases kept as given)
  std::vector<std::string> structural;  // STRUCT_* ids
};

// "all", "catalog", "structural", or a comma-separated list of catalog ids,
// aliases and STRUCT_* ids. Throws ArgumentError on an unknown id or an empty
// selection; nothing is computed.
Suite resolve_suite(const std::string& selector);

// Every STRUCT_* id, in check_structure order.
const std::vector<std::string>& structural_ids();

// Largest index covered by the structural checks.
inline constexpr int kStructuralMaxN = 10;

struct Options {
  Suite suite;
  ExtReal tol{"1e-8"};
  int parallelism = 1;
  double timeout_s = 120.0;
  bool inject_failure = false;  // append a record that always fails
  bool timings = false;         // elapsed_ms is 0 unless set, keeping output reproducible
};

struct Row {
  std::string id;
  std::string description;
  std::string lhs, rhs, abs_err, rel_err, tol;  // full-precision decimals
  bool pass = false;
  std::size_t evaluations = 0;
  long elapsed_ms = 0;
};

struct Summary {
  std::size_t total = 0, passed = 0, failed = 0;
};

struct VerificationReport {
  std::string suite;
  std::string tolerance;
  int precision_digits = 0;
  std::vector<Row> results;  // sorted by id
  Summary summary;
};

// Throws ArgumentError when tol is non-positive or finer than
// 10^-(working_digits - 8), or when parallelism < 1.
void validate(const Options& options);

VerificationReport run(const Options& options);

std::string to_json(const VerificationReport& r);
std::string to_csv(const VerificationReport& r);
std::string to_human(const VerificationReport& r);

}  // namespace zwb::report
