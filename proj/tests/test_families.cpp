#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trigcert/certify.hpp"
#include "trigcert/families.hpp"

using namespace trigcert;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("phi") {
    CHECK(phi(3).coeffs == std::vector<Rational>{make_rational(5, 4), Rational(1), make_rational(1, 4)});
    CHECK(phi(5).coeffs == std::vector<Rational>{make_rational(5, 4), Rational(1), Rational(1),
                                                 Rational(1), make_rational(7, 20)});
    CHECK(phi(9).coeffs.back() == make_rational(5, 12));
    CHECK_THROWS_AS(phi(4), std::invalid_argument);
    CHECK_THROWS_AS(phi(1), std::invalid_argument);
}

TEST_CASE("sigma") {
    CHECK(sigma(3).coeffs == std::vector<Rational>{Rational(1), Rational(1), make_rational(1, 2)});
    CHECK(sigma(2).coeffs == std::vector<Rational>{Rational(1), make_rational(1, 2)});
    CHECK(sigma(6).coeffs.size() == 6);
    CHECK(sigma(6).coeffs[4] == Rational(1));
    CHECK_THROWS_AS(sigma(1), std::invalid_argument);
}

TEST_CASE("theta") {
    CHECK(theta(3, -1).coeffs == std::vector<Rational>{Rational(3), Rational(0), Rational(-1)});
    CHECK(theta(4, +1).coeffs ==
          std::vector<Rational>{Rational(4), Rational(0), Rational(0), Rational(1)});
    CHECK(theta(2, -1).coeffs == std::vector<Rational>{Rational(2), Rational(-1)});
    CHECK_THROWS_AS(theta(1, -1), std::invalid_argument);
    CHECK_THROWS_AS(theta(3, 2), std::invalid_argument);
}

TEST_CASE("lukacs") {
    CHECK(lukacs(3).coeffs == std::vector<Rational>{Rational(3), Rational(2), Rational(1)});
    CHECK(lukacs(1).coeffs == std::vector<Rational>{Rational(1)});
    CHECK(lukacs(5).coeffs ==
          std::vector<Rational>{Rational(5), Rational(4), Rational(3), Rational(2), Rational(1)});
}

TEST_CASE("kappa_lambda") {
    CHECK(kappa_lambda(3, make_rational(5, 4), make_rational(1, 4)) == phi(3));
    CHECK(kappa_lambda(4, Rational(1), make_rational(1, 2)) == sigma(4));
    CHECK(kappa_lambda(5, Rational(0), Rational(0)).coeffs ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1), Rational(1), Rational(0)});
    CHECK_THROWS_AS(kappa_lambda(2, Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("family id parsing") {
    FamilyId id = parse_family_id("kappa-lambda:4:1:1/2");
    CHECK(id.tag == FamilyTag::kappa_lambda);
    CHECK(id.build() == sigma(4));

    CHECK(parse_family_id("phi:5").build() == phi(5));
    CHECK(parse_family_id("theta-:2").build() == theta(2, -1));
    CHECK(parse_family_id("theta+:4").build() == theta(4, +1));
    CHECK(parse_family_id("lukacs:3").build() == lukacs(3));
    CHECK(parse_family_id("vietoris:5").build().coeffs == vietoris_sine(5).coeffs);
    CHECK(parse_family_id("sigma:6").name() == "sigma");

    CHECK_THROWS_AS(parse_family_id("phi"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_id("phi:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_id("nope:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_id("kappa-lambda:4:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_id("phi:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_id("sigma:6:9"), std::invalid_argument);
}

TEST_CASE("property: phi sits on the kappa-lambda family") {
    for (int n = 3; n <= 19; n += 2)
        CHECK(phi(n) == kappa_lambda(n, make_rational(5, 4), make_rational(2L * n - 3, 4L * n)));
}

TEST_CASE("property: sigma closed form at floating precision") {
    // sigma(x) * 2 sin(x/2) = cos(x/2) * (1 - cos(nx))
    for (int n = 2; n <= 10; ++n) {
        SinePoly s = sigma(n);
        for (int j = 1; j < 40; ++j) {
            double x = kPi * j / 40.0;
            double lhs = eval_float(s, x) * 2 * std::sin(x / 2);
            double rhs = std::cos(x / 2) * (1 - std::cos(n * x));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("property: both theta variants certify nonnegative") {
    for (int n = 2; n <= 20; ++n) {
        CHECK(certify_sine(theta(n, -1), CertifyMethod::sturm).status == Status::nonnegative);
        CHECK(certify_sine(theta(n, +1), CertifyMethod::sturm).status == Status::nonnegative);
    }
}
