// zwb: compute constant sequences and verify the identity catalog.
//
//   zwb compute γ --n 0..5
//   zwb compute zeta-deriv0 --n 2 --route all
//   zwb verify --suite all --tol 1e-8 --output json
//   zwb report --suite EQ_3_13,STRUCT_B_SIGN --output csv
//
// Exit status: 0 when every result passes, 1 when any fails, 2 on a usage error.

#include "zwb/catalog.hpp"
#include "zwb/constants.hpp"
#include "zwb/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>

using namespace zwb;

namespace {

constexpr int kUsage = 2;

struct Args {
  std::string tag;
  std::string range = "0..5";
  std::string route;
  std::string suite = "all";
  std::string tol = "1e-8";
  std::optional<int> digits;
  std::string output;
  std::string output_file;
  int parallelism = 1;
  double timeout_s = 120.0;
  bool inject_failure = false;
  bool timings = false;
  bool list = false;
};

std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex single(R"(\s*(-?\d+)\s*)");
  static const std::regex span(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (std::regex_match(s, m, single)) return {std::stoi(m[1]), std::stoi(m[1])};
  if (std::regex_match(s, m, span)) return {std::stoi(m[1]), std::stoi(m[2])};
  throw ArgumentError("--n expects N or N0..N1, got '" + s + "'");
}

// --digits wins over ZETA_DIGITS; 40 when neither is set.
int working_digits(const std::optional<int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ZETA_DIGITS"); env && *env) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(env, &used);
      if (used == std::string(env).size()) return d;
    } catch (const std::exception&) {
    }
    throw ArgumentError(std::string("ZETA_DIGITS must be an integer, got '") + env + "'");
  }
  return PrecisionConfig{}.working_digits;
}

void emit(const std::string& text, const std::string& file) {
  if (file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(file);
  if (!out) throw ArgumentError("cannot write " + file);
  out << text;
}

int compute(const Args& a) {
  const auto tag = constants::parse_tag(a.tag);
  if (!tag) throw ArgumentError("unknown sequence tag: " + a.tag);
  const auto [n0, n1] = parse_range(a.range);
  const auto seq = constants::sequence(*tag, n0, n1, a.route);
  const std::string format = a.output.empty() ? "human" : a.output;

  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["tag"] = constants::to_string(seq.tag);
    doc["precision_digits"] = precision().working_digits;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : seq.entries) {
      doc["entries"].push_back({{"index", e.index},
                                {"value", to_decimal(e.value)},
                                {"route", e.route},
                                {"err_estimate", to_decimal(e.err_estimate, 3)}});
    }
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    os << "index,value,route,err_estimate\n";
    for (const auto& e : seq.entries) {
      os << e.index << ',' << to_decimal(e.value) << ',' << e.route << ',' << to_decimal(e.err_estimate, 3) << '\n';
    }
  } else {
    os << constants::to_string(seq.tag) << " at " << precision().working_digits << " digits\n";
    os << std::left << std::setw(6) << "n" << std::setw(52) << "value" << std::setw(20) << "route" << "err\n";
    for (const auto& e : seq.entries) {
      os << std::setw(6) << e.index << std::setw(52) << to_decimal(e.value) << std::setw(20) << e.route
         << to_decimal(e.err_estimate, 3) << '\n';
    }
  }
  emit(os.str(), a.output_file);
  return 0;
}

int list_ids() {
  for (const auto& r : catalog::catalog()) std::cout << r.id << "  " << r.description << '\n';
  for (const auto& [alias, id] : catalog::aliases()) std::cout << alias << "  alias of " << id << '\n';
  for (const auto& id : report::structural_ids()) std::cout << id << '\n';
  return 0;
}

int verify(const Args& a, const std::string& default_format) {
  if (a.list) return list_ids();
  report::Options o;
  o.suite = report::resolve_suite(a.suite);
  try {
    o.tol = ExtReal(a.tol);
  } catch (const std::exception&) {
    throw ArgumentError("--tol must be a number, got '" + a.tol + "'");
  }
  o.parallelism = a.parallelism;
  o.timeout_s = a.timeout_s;
  o.inject_failure = a.inject_failure;
  o.timings = a.timings;
  report::validate(o);

  const auto rep = report::run(o);
  const std::string format = a.output.empty() ? default_format : a.output;
  emit(format == "json" ? report::to_json(rep) : format == "csv" ? report::to_csv(rep) : report::to_human(rep),
       a.output_file);
  return rep.summary.failed == 0 ? 0 : 1;
}

void add_common(CLI::App* cmd, Args& a) {
  cmd->add_option("--digits", a.digits, "working precision in decimal digits (overrides ZETA_DIGITS)")
      ->check(CLI::Range(25, 1000));
  cmd->add_option("--output", a.output, "human, json or csv")->check(CLI::IsMember({"human", "json", "csv"}));
  cmd->add_option("--output-file", a.output_file, "write to this file instead of stdout");
}

void add_verify_flags(CLI::App* cmd, Args& a) {
  add_common(cmd, a);
  cmd->add_option("--suite", a.suite, "all, catalog, structural, or comma-separated ids");
  cmd->add_option("--tol", a.tol, "pass threshold on |lhs - rhs|");
  cmd->add_option("--parallelism", a.parallelism, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--timeout-s", a.timeout_s, "per-identity time limit in seconds")->check(CLI::PositiveNumber);
  cmd->add_flag("--inject-failure", a.inject_failure, "add a record that always fails");
  cmd->add_flag("--timings", a.timings, "report elapsed_ms (output is then not reproducible)");
  cmd->add_flag("--list", a.list, "list identity and check ids, then exit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta-derivative and Stieltjes-constant workbench"};
  app.require_subcommand(1);
  Args a;

  auto* compute_cmd = app.add_subcommand("compute", "print a constant sequence");
  compute_cmd->add_option("tag", a.tag, "stieltjes|γ|eta|η|sigma|σ|lehmer-b|d|zeta-deriv0")->required();
  compute_cmd->add_option("--n", a.range, "index N or range N0..N1");
  compute_cmd->add_option("--route", a.route, "route id, or 'all'");
  add_common(compute_cmd, a);

  auto* verify_cmd = app.add_subcommand("verify", "evaluate identities and structural checks");
  add_verify_flags(verify_cmd, a);
  auto* report_cmd = app.add_subcommand("report", "as verify, emitting JSON unless --output says otherwise");
  add_verify_flags(report_cmd, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    PrecisionConfig config;
    config.working_digits = working_digits(a.digits);
    PrecisionScope scope(config);
    if (*compute_cmd) return compute(a);
    if (*verify_cmd) return verify(a, "human");
    return verify(a, "json");
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
