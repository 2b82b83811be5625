#include "zwb/catalog.hpp"

#include <doctest.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace zwb;
using namespace zwb::catalog;

namespace {

std::string read_file(const char* path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("ids are unique and sorted") {
  std::set<std::string> seen;
  std::string prev;
  for (const auto& r : zwb::catalog::catalog()) {
    CHECK(seen.insert(r.id).second);
    CHECK(prev < r.id);
    prev = r.id;
    CHECK_FALSE(r.default_grid.empty());
    CHECK(static_cast<bool>(r.evaluate));
  }
  CHECK(zwb::catalog::catalog().size() >= 50);
}

TEST_CASE("every anchor is quoted verbatim from the source text") {
  const std::string text = read_file(ZWB_PAPER_PATH);
  REQUIRE_FALSE(text.empty());
  for (const auto& r : zwb::catalog::catalog()) {
    INFO(r.id << ": " << r.anchor);
    CHECK_FALSE(r.anchor.empty());
    CHECK(text.find(r.anchor) != std::string::npos);
  }
}

TEST_CASE("every identity passes at its default grid") {
  const ExtReal tol("1e-8");
  for (const auto& r : zwb::catalog::catalog()) {
    const auto start = std::chrono::steady_clock::now();
    const Residual res = evaluate(r, {}, tol);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cerr << r.id << "  abs_err " << to_decimal(res.abs_err, 3) << "  " << static_cast<long>(ms) << " ms\n";
    INFO(r.id << " worst at " << res.label << ": lhs " << to_decimal(res.lhs_value, 25) << " rhs "
              << to_decimal(res.rhs_value, 25));
    CHECK(res.pass);
  }
}

TEST_CASE("the well-known integral gives pi at s = 1/2") {
  const Residual r = evaluate_identity("EQ_1_2", {{"s", ExtReal("0.5")}}, ExtReal("1e-8"));
  CHECK(r.pass);
  CHECK(abs(r.lhs_value - pi()) < ExtReal("1e-20"));
}

TEST_CASE("alias resolves to the integral-vs-closed-form record") {
  REQUIRE(find("EQ_1_9_vs_1_10") != nullptr);
  CHECK(find("EQ_1_9_vs_1_10")->id == "EQ_1_9");
  const Residual r = evaluate_identity("EQ_1_9_vs_1_10", {}, ExtReal("1e-8"));
  CHECK(r.id == "EQ_1_9_vs_1_10");
  CHECK(r.abs_err < ExtReal("1e-8"));
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(evaluate_identity("NO_SUCH_ID", {}, ExtReal("1e-8")), ArgumentError);
  CHECK_THROWS_AS(evaluate_identity("EQ_1_1", {{"s", ExtReal(1)}}, ExtReal("1e-8")), DomainError);
  CHECK_THROWS_AS(evaluate_identity("EQ_1_1", {{"s", ExtReal("1.5")}}, ExtReal("1e-8")), DomainError);
  CHECK_THROWS_AS(evaluate_identity("EQ_2_1", {{"s", ExtReal(1)}}, ExtReal("1e-8")), DomainError);
  CHECK_THROWS_AS(evaluate_identity("EQ_4_6", {{"n", ExtReal("2.5")}}, ExtReal("1e-8")), DomainError);
  CHECK_THROWS_AS(evaluate_identity("EQ_1_1", {{"q", ExtReal("0.5")}}, ExtReal("1e-8")), DomainError);
  CHECK_THROWS_AS(evaluate_identity("EQ_3_13_2", {{"u", ExtReal("0.3")}}, ExtReal("1e-8")), DomainError);
  CHECK_THROWS_AS(evaluate_identity("EQ_1_1", {}, ExtReal(0)), ArgumentError);
}

TEST_CASE("overrides replace grid values") {
  const auto& r = *find("EQ_1_18");
  const auto points = expand_params(r, {{"x", ExtReal(3)}});
  CHECK(points.size() == 3);
  for (const auto& p : points) CHECK(p.at("x") == 3);
  CHECK(expand_params(r, {{"x", ExtReal(3)}, {"s", ExtReal(0)}}).size() == 1);
}

TEST_CASE("relaxed threshold") {
  CHECK(effective_tol(*find("EQ_1_16"), ExtReal("1e-8")) == ExtReal("1e-6"));
  CHECK(effective_tol(*find("EQ_1_16"), ExtReal("1e-4")) == ExtReal("1e-4"));
  CHECK(effective_tol(*find("EQ_1_1"), ExtReal("1e-8")) == ExtReal("1e-8"));
}

TEST_CASE("the synthetic record fails") {
  const Residual r = evaluate(synthetic_failure(), {}, ExtReal("1e-8"));
  CHECK_FALSE(r.pass);
  CHECK(r.abs_err == 1);
}
