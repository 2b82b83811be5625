#include "zwb/report.hpp"

#include "zwb/catalog.hpp"
#include "zwb/constants.hpp"
#include "zwb/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

namespace zwb::report {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

bool is_structural(const std::string& id) {
  const auto& all = structural_ids();
  return std::find(all.begin(), all.end(), id) != all.end();
}

Row failed_row(const std::string& id, const std::string& description, const ExtReal& tol, const std::string& why) {
  Row r;
  r.id = id;
  r.description = description + " [error: " + why + "]";
  r.lhs = r.rhs = "nan";
  r.abs_err = r.rel_err = "inf";
  r.tol = to_decimal(tol);
  return r;
}

Row catalog_row(const std::string& id, const ExtReal& tol) {
  const catalog::IdentityRecord* rec = id == catalog::synthetic_failure().id ? &catalog::synthetic_failure()
                                                                              : catalog::find(id);
  try {
    const catalog::Residual res = catalog::evaluate(*rec, {}, tol);
    Row r;
    r.id = id;
    r.description = rec->description + "; worst case: " + res.label;
    r.lhs = to_decimal(res.lhs_value);
    r.rhs = to_decimal(res.rhs_value);
    r.abs_err = to_decimal(res.abs_err);
    r.rel_err = to_decimal(res.rel_err);
    r.tol = to_decimal(res.tol);
    r.pass = res.pass;
    r.evaluations = res.evaluations;
    return r;
  } catch (const TimeoutError& e) {
    return failed_row(id, rec->description, catalog::effective_tol(*rec, tol), std::string("timeout: ") + e.what());
  } catch (const std::exception& e) {
    return failed_row(id, rec->description, catalog::effective_tol(*rec, tol), e.what());
  }
}

std::vector<Row> structural_rows(const std::vector<std::string>& wanted, const ExtReal& tol) {
  std::vector<Row> rows;
  try {
    const std::size_t before = quad::evaluation_count();
    const auto checks = constants::check_structure(kStructuralMaxN);
    const std::size_t evaluations = quad::evaluation_count() - before;
    for (const auto& c : checks) {
      if (std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
      Row r;
      r.id = c.id;
      r.description = c.description;
      if (!c.detail.empty()) r.description += "; " + c.detail;
      r.lhs = to_decimal(c.lhs);
      r.rhs = to_decimal(c.rhs);
      const ExtReal diff = abs(c.lhs - c.rhs);
      r.abs_err = to_decimal(diff);
      r.rel_err = to_decimal(c.rhs != 0 ? ExtReal(diff / abs(c.rhs)) : diff);
      r.tol = to_decimal(tol);
      r.pass = c.pass;
      r.evaluations = evaluations;
      rows.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    for (const auto& id : wanted) rows.push_back(failed_row(id, "structural check", tol, e.what()));
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string>& structural_ids() {
  static const std::vector<std::string> ids{"STRUCT_ETA_SIGN",         "STRUCT_B_SIGN",      "STRUCT_SIGMA_LOWER",
                                            "STRUCT_B_UPPER",          "STRUCT_B_EVEN_BELOW_ONE", "STRUCT_LEHMER_BELL",
                                            "STRUCT_LAURENT_FD",       "STRUCT_APOSTOL_TREND"};
  return ids;
}

Suite resolve_suite(const std::string& selector) {
  Suite s;
  s.name = selector;
  auto all_catalog = [&s] {
    for (const auto& r : catalog::catalog()) s.ids.push_back(r.id);
  };
  if (selector == "all") {
    all_catalog();
    s.structural = structural_ids();
    return s;
  }
  if (selector == "catalog") {
    all_catalog();
    return s;
  }
  if (selector == "structural") {
    s.structural = structural_ids();
    return s;
  }
  std::set<std::string> seen;
  for (const auto& id : split(selector)) {
    if (!seen.insert(id).second) continue;
    if (is_structural(id)) {
      s.structural.push_back(id);
    } else if (catalog::find(id) != nullptr && id != catalog::synthetic_failure().id) {
      s.ids.push_back(id);
    } else {
      throw ArgumentError("unknown identity id: " + id);
    }
  }
  if (s.ids.empty() && s.structural.empty()) throw ArgumentError("empty suite");
  return s;
}

void validate(const Options& o) {
  if (!(o.tol > 0)) throw ArgumentError("--tol must be positive");
  const ExtReal finest = eps_digits(-8);
  if (o.tol < finest) {
    throw ArgumentError("--tol " + to_decimal(o.tol, 6) + " is finer than 10^-(digits-8) = " + to_decimal(finest, 6));
  }
  if (o.parallelism < 1) throw ArgumentError("--parallelism must be at least 1");
  if (!(o.timeout_s > 0)) throw ArgumentError("--timeout-s must be positive");
  if (o.suite.ids.empty() && o.suite.structural.empty() && !o.inject_failure) throw ArgumentError("empty suite");
}

VerificationReport run(const Options& o) {
  validate(o);

  std::vector<std::function<std::vector<Row>()>> tasks;
  for (const auto& id : o.suite.ids) {
    tasks.push_back([id, &o] { return std::vector<Row>{catalog_row(id, o.tol)}; });
  }
  if (o.inject_failure) {
    tasks.push_back([&o] { return std::vector<Row>{catalog_row(catalog::synthetic_failure().id, o.tol)}; });
  }
  if (!o.suite.structural.empty()) {
    tasks.push_back([&o] { return structural_rows(o.suite.structural, o.tol); });
  }

  std::vector<std::vector<Row>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto timeout = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(o.timeout_s));
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = Clock::now();
      DeadlineScope deadline(start + timeout);
      slots[i] = tasks[i]();
      const long ms = static_cast<long>(
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
      for (auto& row : slots[i]) row.elapsed_ms = o.timings ? ms : 0;
    }
  };
  const int n_threads = std::min<int>(o.parallelism, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerificationReport rep;
  rep.suite = o.suite.name;
  rep.tolerance = to_decimal(o.tol);
  rep.precision_digits = precision().working_digits;
  for (auto& slot : slots) {
    for (auto& row : slot) rep.results.push_back(std::move(row));
  }
  std::sort(rep.results.begin(), rep.results.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
  rep.summary.total = rep.results.size();
  for (const auto& r : rep.results) (r.pass ? rep.summary.passed : rep.summary.failed)++;
  return rep;
}

std::string to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["suite"] = r.suite;
  doc["tolerance"] = r.tolerance;
  doc["precision_digits"] = r.precision_digits;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.results) {
    ordered_json j;
    j["id"] = row.id;
    j["description"] = row.description;
    j["lhs"] = row.lhs;
    j["rhs"] = row.rhs;
    j["abs_err"] = row.abs_err;
    j["rel_err"] = row.rel_err;
    j["tol"] = row.tol;
    j["pass"] = row.pass;
    j["evaluations"] = row.evaluations;
    j["elapsed_ms"] = row.elapsed_ms;
    rows.push_back(std::move(j));
  }
  doc["results"] = std::move(rows);
  doc["summary"] = {{"total", r.summary.total}, {"passed", r.summary.passed}, {"failed", r.summary.failed}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "id,description,lhs,rhs,abs_err,rel_err,tol,pass,evaluations,elapsed_ms\n";
  for (const auto& row : r.results) {
    os << csv_field(row.id) << ',' << csv_field(row.description) << ',' << row.lhs << ',' << row.rhs << ','
       << row.abs_err << ',' << row.rel_err << ',' << row.tol << ',' << (row.pass ? "true" : "false") << ','
       << row.evaluations << ',' << row.elapsed_ms << '\n';
  }
  return os.str();
}

std::string to_human(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ", tol " << r.tolerance << ", " << r.precision_digits << " digits\n\n";
  os << std::left << std::setw(26) << "id" << std::setw(6) << "pass" << std::setw(14) << "abs_err" << std::setw(14)
     << "tol" << "evaluations\n";
  for (const auto& row : r.results) {
    auto brief = [](const std::string& s) {
      if (s == "nan" || s == "inf") return s;
      return to_decimal(ExtReal(s), 3);
    };
    os << std::setw(26) << row.id << std::setw(6) << (row.pass ? "ok" : "FAIL") << std::setw(14)
       << brief(row.abs_err) << std::setw(14) << brief(row.tol) << row.evaluations;
    if (row.elapsed_ms > 0) os << "  " << row.elapsed_ms << " ms";
    os << '\n';
    if (!row.pass) os << "    " << row.description << "\n    lhs " << row.lhs << "\n    rhs " << row.rhs << '\n';
  }
  os << "\n" << r.summary.passed << " passed, " << r.summary.failed << " failed, " << r.summary.total << " total\n";
  return os.str();
}

}  // namespace zwb::report
