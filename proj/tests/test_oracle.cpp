#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "trigcert/certify.hpp"
#include "trigcert/families.hpp"
#include "trigcert/oracle.hpp"

using namespace trigcert;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("dense_min on known polynomials") {
    SampleReport s = dense_min(sigma(4), 10000);
    CHECK(s.min_value >= -1e-9);
    CHECK(s.samples == 10000);

    SampleReport neg = dense_min(SinePoly({Rational(-1)}), 10000);
    CHECK(neg.min_value == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(neg.argmin_x == doctest::Approx(kPi / 2).epsilon(1e-3));

    SampleReport p3 = dense_min(phi(3), 10000);
    CHECK(p3.min_value >= -1e-9);
    CHECK(p3.argmin_x > 2.8);  // flat fifth-order zero at pi

    CHECK_THROWS_AS(dense_min(sigma(4), 1), std::invalid_argument);
}

TEST_CASE("property: dense sampling never contradicts a certified verdict") {
    TestRng rng(60601);
    int nn = 0, neg = 0;
    for (int i = 0; i < 150; ++i) {
        SinePoly p = random_sine_poly(1 + static_cast<int>(rng.below(6)), 6, rng.next());
        if (p.effective_degree() == 0) continue;
        Verdict v = certify_sine(p, CertifyMethod::sturm);
        if (v.status == Status::nonnegative) {
            ++nn;
            CHECK(dense_min(p, 10000).min_value >= -1e-9);
        } else {
            ++neg;
            CHECK(dense_min(p, 100000).min_value < 0);
        }
    }
    CHECK(nn > 0);
    CHECK(neg > 0);
}

TEST_CASE("random_sine_poly is deterministic and bounded") {
    SinePoly a = random_sine_poly(3, 9, 42);
    SinePoly b = random_sine_poly(3, 9, 42);
    CHECK(a == b);
    CHECK(a.degree() == 3);

    SinePoly tiny = random_sine_poly(1, 1, 7);
    CHECK(tiny.coeffs.size() == 1);
    CHECK(abs(tiny.coeffs[0]) <= Rational(1));

    for (const auto& c : random_sine_poly(8, 9, 1234).coeffs) {
        CHECK(abs(c.get_num()) <= 9);
        CHECK(c.get_den() <= 9);
    }

    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
        seen.insert(coeff_list_to_string(random_sine_poly(4, 9, seed).coeffs));
    CHECK(seen.size() >= 998);  // collisions are overwhelmingly unlikely

    CHECK_THROWS_AS(random_sine_poly(0, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_sine_poly(3, 0, 1), std::invalid_argument);
}
