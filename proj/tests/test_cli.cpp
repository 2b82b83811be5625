#include "zwb/catalog.hpp"
#include "zwb/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using namespace zwb;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + ZWB_CLI_PATH + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("single passing identity exits 0 with one row") {
  const auto r = cli("verify --suite EQ_3_13 --tol 1e-10 --output json");
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["id"] == "EQ_3_13");
  CHECK(doc["results"][0]["pass"] == true);
  CHECK(doc["summary"]["total"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(cli("verify --suite EQ_3_13 --inject-failure").status == 1);
  CHECK(cli("verify --suite NOT_AN_ID").status == 2);
  CHECK(cli("verify --suite EQ_3_13 --tol 1e-40").status == 2);
  CHECK(cli("verify --suite EQ_3_13 --tol -1").status == 2);
  CHECK(cli("verify --suite EQ_3_13 --output xml").status == 2);
  CHECK(cli("verify --suite EQ_3_13 --parallelism 0").status == 2);
  CHECK(cli("").status == 2);
  CHECK(cli("compute nonsense").status == 2);
  CHECK(cli("compute gamma --n 3..x").status == 2);
  CHECK(cli("compute gamma --n 0..3 --digits 10").status == 2);
}

TEST_CASE("injected failure appears as a failed row") {
  const auto r = cli("report --suite EQ_3_13 --inject-failure");
  CHECK(r.status == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["summary"]["total"] == 2);
  CHECK(doc["summary"]["failed"] == 1);
  CHECK(doc["results"][1]["id"] == "SYNTHETIC_FAIL");
  CHECK(doc["results"][1]["pass"] == false);
}

TEST_CASE("JSON field order and decimal strings") {
  const auto doc = nlohmann::ordered_json::parse(cli("report --suite EQ_2_2,STRUCT_B_SIGN").out);
  std::vector<std::string> top;
  for (auto it = doc.begin(); it != doc.end(); ++it) top.push_back(it.key());
  CHECK(top == std::vector<std::string>{"suite", "tolerance", "precision_digits", "results", "summary"});
  std::vector<std::string> fields;
  for (auto it = doc["results"][0].begin(); it != doc["results"][0].end(); ++it) fields.push_back(it.key());
  CHECK(fields == std::vector<std::string>{"id", "description", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass",
                                           "evaluations", "elapsed_ms"});
  CHECK(doc["results"][0]["id"] == "EQ_2_2");
  CHECK(doc["results"][1]["id"] == "STRUCT_B_SIGN");
  const std::string lhs = doc["results"][0]["lhs"];
  CHECK(lhs.rfind("5.772156649015328606065120900824024310421", 0) == 0);
  CHECK(doc["results"][0]["elapsed_ms"] == 0);
  CHECK(doc["precision_digits"] == 40);
}

TEST_CASE("CSV columns follow the JSON field order") {
  const auto rows = lines(cli("verify --suite EQ_3_13 --output csv").out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "id,description,lhs,rhs,abs_err,rel_err,tol,pass,evaluations,elapsed_ms");
  CHECK(rows[1].rfind("EQ_3_13,", 0) == 0);
}

TEST_CASE("precision comes from --digits, then ZETA_DIGITS") {
  CHECK(nlohmann::json::parse(cli("report --suite EQ_2_2", "ZETA_DIGITS=50").out)["precision_digits"] == 50);
  CHECK(nlohmann::json::parse(cli("report --suite EQ_2_2 --digits 45", "ZETA_DIGITS=50").out)["precision_digits"] ==
        45);
  CHECK(cli("report --suite EQ_2_2", "ZETA_DIGITS=abc").status == 2);
}

TEST_CASE("compute prints a sequence table") {
  const auto r = cli("compute γ --n 0..5 --output csv");
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "index,value,route,err_estimate");
  CHECK(rows[1].rfind("0,5.7721566490153286060651209008240243104216e-01,oracle,", 0) == 0);
}

TEST_CASE("zeta-deriv0 routes agree") {
  const auto r = cli("compute zeta-deriv0 --n 2 --route all --output json");
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["entries"].size() == 6);
  std::vector<ExtReal> v;
  for (const auto& e : doc["entries"]) v.emplace_back(e["value"].get<std::string>());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) CHECK(abs(v[i] - v[j]) < ExtReal("1e-6"));
  }
}

TEST_CASE("reports are reproducible and independent of parallelism") {
  std::string ids = "EQ_1_1,EQ_2_13,EQ_3_6,EQ_4_1,COHEN_CHAIN";
  for (const auto& id : report::structural_ids()) ids += "," + id;
  const auto a = cli("report --suite " + ids);
  const auto b = cli("report --suite " + ids);
  const auto c = cli("report --suite " + ids + " --parallelism 4");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("suite resolution") {
  CHECK(report::resolve_suite("all").ids.size() == catalog::catalog().size());
  CHECK(report::resolve_suite("all").structural.size() == 8);
  CHECK(report::resolve_suite("structural").ids.empty());
  CHECK(report::resolve_suite("catalog").structural.empty());
  const auto s = report::resolve_suite("EQ_1_9_vs_1_10, STRUCT_B_SIGN");
  CHECK(s.ids == std::vector<std::string>{"EQ_1_9_vs_1_10"});
  CHECK(s.structural == std::vector<std::string>{"STRUCT_B_SIGN"});
  CHECK_THROWS_AS(report::resolve_suite("EQ_1_1,BOGUS"), ArgumentError);
  CHECK_THROWS_AS(report::resolve_suite(""), ArgumentError);
  CHECK_THROWS_AS(report::resolve_suite("SYNTHETIC_FAIL"), ArgumentError);
}

TEST_CASE("a timeout becomes a failed row") {
  report::Options o;
  o.suite = report::resolve_suite("EQ_1_7");
  o.timeout_s = 1e-6;
  const auto rep = report::run(o);
  REQUIRE(rep.results.size() == 1);
  CHECK_FALSE(rep.results[0].pass);
  CHECK(rep.results[0].description.find("timeout") != std::string::npos);
  CHECK(rep.summary.failed == 1);
}

TEST_CASE("option validation") {
  report::Options o;
  o.suite = report::resolve_suite("EQ_2_2");
  o.tol = ExtReal("1e-33");
  CHECK_THROWS_AS(report::validate(o), ArgumentError);
  o.tol = ExtReal("1e-32");
  CHECK_NOTHROW(report::validate(o));
  o.parallelism = 0;
  CHECK_THROWS_AS(report::validate(o), ArgumentError);
}
