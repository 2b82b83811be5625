#include "zwb/bell.hpp"
#include "zwb/constants.hpp"
#include "zwb/specfun.hpp"

#include <boost/math/constants/constants.hpp>
#include <doctest.h>

using namespace zwb;
using namespace zwb::constants;

namespace {

ExtReal euler() { return boost::math::constants::euler<ExtReal>(); }
ExtReal zeta2() { return pi() * pi() / 6; }

// zeta^(n)(0) and gamma_n to 45 digits, computed independently with mpmath.
const char* const kZetaDeriv0[] = {
    "-0.5",
    "-0.918938533204672741780329736405617639861397474",
    "-2.00635645590858485121010002672996043819899491",
    "-6.00471116686225444776106081336637528546180767",
    "-23.9971031880137079589872195277410056618911399",
    "-120.000232907558454724535985837795819747892057",
    "-720.000936825130050929504283508545398558763853",
    "-5039.99915017623499833084829397239764878160782",
    "-40320.0002324317355115595828556900637168698615",
    "-362880.000330589663612296445256127250159219129",
    "-3628799.99945676588422029152776801105687968991",
};
const char* const kStieltjes[] = {
    "0.577215664901532860606512090082402431042159336",
    "-0.0728158454836767248605863758749013191377363383",
    "-0.0096903631928723184845303860352125293590658061",
    "0.00205383442030334586616004654275338428571580445",
    "0.00232537006546730005746817017752606800090446941",
    "0.000793323817301062701753334877444444830731539405",
    "-0.000238769345430199609872421841908004277783715156",
    "-0.000527289567057751046074097505478858281996253473",
    "-0.000352123353803039509602052165001208741729180534",
};

ExtReal eta1_ref() {
  const ExtReal g = euler();
  return g * g + 2 * ExtReal(kStieltjes[1]);
}

}  // namespace

TEST_CASE("g derivatives") {
  CHECK(abs(g_deriv0(0) + euler() + log(2 * pi())) < ExtReal("1e-40"));
  CHECK(abs(g_deriv0(1) + zeta2() / 2) < ExtReal("1e-40"));
  CHECK(abs(g_deriv0(2) + 2 * ExtReal(specfun::zeta_em(ExtReal(3)))) < ExtReal("1e-40"));
  CHECK(f_deriv0(0).value == -1);
  CHECK(abs(f_deriv0(2).value - 2 * ExtReal(kStieltjes[1])) < ExtReal("1e-38"));
}

TEST_CASE("Stieltjes constants by every route") {
  for (int n = 0; n <= 6; ++n) {
    const ExtReal ref(kStieltjes[n]);
    for (auto route : all_stieltjes_routes()) {
      CAPTURE(n);
      CAPTURE(to_string(route));
      const Estimate e = stieltjes(n, route);
      CHECK(abs(e.value - ref) < ExtReal(n <= 4 ? "1e-15" : "1e-12"));
    }
  }
  CHECK_THROWS_AS(stieltjes(9, StieltjesRoute::bell_2_3), ArgumentError);
  CHECK_THROWS_AS(stieltjes(13, StieltjesRoute::oracle), ArgumentError);
}

TEST_CASE("zeta derivatives at 0 by every route") {
  for (int n = 0; n <= 8; ++n) {
    const ExtReal ref(kZetaDeriv0[n]);
    for (auto route : all_zeta_routes()) {
      CAPTURE(n);
      CAPTURE(to_string(route));
      const Estimate e = zeta_deriv0(n, route);
      CHECK(abs(e.value - ref) < ExtReal("1e-10") * (abs(ref) > 1 ? abs(ref) : ExtReal(1)));
    }
  }
  for (int n = 9; n <= 10; ++n) {
    const ExtReal ref(kZetaDeriv0[n]);
    for (auto route : {ZetaRoute::functional_4_1, ZetaRoute::lehmer_4_19, ZetaRoute::recurrence_4_24}) {
      CAPTURE(n);
      CAPTURE(to_string(route));
      CHECK(abs(zeta_deriv0(n, route).value - ref) < ExtReal("1e-20") * abs(ref));
    }
  }
  CHECK_THROWS_AS(zeta_deriv0(9, ZetaRoute::integral_1_8), ArgumentError);
  CHECK_THROWS_AS(zeta_deriv0(11, ZetaRoute::lehmer_4_19), ArgumentError);
}

TEST_CASE("eta sequence") {
  CHECK(abs(eta(0).value + euler()) < ExtReal("1e-38"));
  CHECK(abs(eta(1).value - eta1_ref()) < ExtReal("1e-38"));
  // forward direction: (-1)^n (n+1) gamma_n = Y_{n+1}(-0! eta_0, ..., -n! eta_n)
  std::vector<ExtReal> x;
  for (int m = 0; m <= 8; ++m) {
    x.push_back(-ExtReal(bell::factorial(m)) * eta(m).value);
    const ExtReal y = bell::complete_recurrence(bell::BellInput<ExtReal>(x), m + 1);
    const ExtReal expect = ExtReal(m % 2 == 0 ? 1 : -1) * (m + 1) * specfun::stieltjes_oracle(m);
    CAPTURE(m);
    CHECK(abs(y - expect) < ExtReal("1e-32"));
  }
}

TEST_CASE("sigma, Lehmer b and d_n") {
  const ExtReal g = euler();
  CHECK(abs(sigma(1).value - (1 + g / 2 - log(4 * pi()) / 2)) < ExtReal("1e-38"));
  CHECK(abs(sigma(2).value - (eta1_ref() - 3 * zeta2() / 4 + 1)) < ExtReal("1e-36"));
  CHECK(abs(lehmer_b(0).value - (log(2 * pi()) - 1)) < ExtReal("1e-40"));
  CHECK(abs(lehmer_b(1).value - (-eta1_ref() + zeta2() / 2 - 1)) < ExtReal("1e-36"));
  for (int n = 1; n <= 11; ++n) {
    CAPTURE(n);
    CHECK(abs(sigma_from_eta(n).value - sigma_from_lehmer(n).value) < ExtReal("1e-20"));
  }
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(abs(lehmer_b(n).value - lehmer_b_inversion(n).value) < ExtReal("1e-20"));
  }
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(abs(d_n_display(n).value - d_n_lehmer(n).value) < ExtReal("1e-20"));
  }
  CHECK(abs(d_n(2).value - (1 + lehmer_b(1).value)) < ExtReal("1e-30"));
  CHECK_THROWS_AS(sigma(0), ArgumentError);
  CHECK_THROWS_AS(d_n(1), ArgumentError);
}

TEST_CASE("finite-difference checks") {
  const ExtReal h(kFdStep);
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const ExtReal exact = ExtReal(n % 2 == 1 ? 1 : -1) * n * ExtReal(kStieltjes[n - 1]);
    const ExtReal a = laurent_derivative_fd(n, h);
    CHECK(abs(a - exact) < ExtReal("1e-10"));
    CHECK(abs(a - laurent_derivative_fd(n, h / 2)) < ExtReal("1e-10"));
  }
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    const ExtReal a = f_series_fd(k, h);
    CHECK(abs(a - k * ExtReal(kStieltjes[k - 1])) < ExtReal("1e-10"));
    CHECK(abs(a - f_series_fd(k, h / 2)) < ExtReal("1e-10"));
  }
  // the stencil is exact on polynomials of degree 8
  auto poly = [](const ExtReal& x) { return pow(x, 8) - 3 * pow(x, 5) + x; };
  CHECK(abs(central_derivative(poly, ExtReal(2), 3, ExtReal("0.1")) - (336 * 32 - 180 * 4)) < ExtReal("1e-30"));
}

TEST_CASE("sequences") {
  const auto all = sequence(Tag::zeta_deriv0, 2, 2, "all");
  CHECK(all.entries.size() == 6);
  for (const auto& a : all.entries) {
    for (const auto& b : all.entries) CHECK(abs(a.value - b.value) < ExtReal("1e-6"));
  }
  const auto g = sequence(Tag::stieltjes, 0, 5);
  REQUIRE(g.entries.size() == 6);
  CHECK(g.entries[0].route == "oracle");
  CHECK(abs(g.entries[0].value - euler()) <= g.entries[0].err_estimate + ExtReal("1e-45"));
  CHECK(parse_tag("γ") == Tag::stieltjes);
  CHECK(parse_tag("zeta-deriv0") == Tag::zeta_deriv0);
  CHECK_FALSE(parse_tag("nope").has_value());
  CHECK_THROWS_AS(sequence(Tag::stieltjes, 0, 1, "bogus"), ArgumentError);
}

TEST_CASE("structural checks") {
  const auto checks = check_structure(10);
  CHECK(checks.size() >= 8);
  for (const auto& c : checks) {
    CAPTURE(c.id);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}
