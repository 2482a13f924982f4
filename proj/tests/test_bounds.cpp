#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trigcert/bounds.hpp"
#include "trigcert/certify.hpp"
#include "trigcert/families.hpp"
#include "trigcert/oracle.hpp"

using namespace trigcert;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("pi enclosure") {
    CHECK(to_double(pi_lower()) <= kPi);
    CHECK(kPi <= to_double(pi_upper()));
    CHECK(pi_upper() - pi_lower() <= make_rational(1, 100000000000000L) * 2);
}

TEST_CASE("sin_enclosure point values match the displayed truncations") {
    RatInterval at_one = sin_enclosure(RatInterval(Rational(1)));
    CHECK(at_one.lo == make_rational(5, 6));
    CHECK(at_one.hi == make_rational(101, 120));
    CHECK(at_one.contains(parse_rational("8414709848078965/10000000000000000")));

    RatInterval at_zero = sin_enclosure(RatInterval(Rational(0)));
    CHECK(at_zero.lo == Rational(0));
    CHECK(at_zero.hi == Rational(0));

    RatInterval half = sin_enclosure({Rational(0), make_rational(1, 2)});
    CHECK(half.lo <= Rational(0));
    CHECK(to_double(half.hi) >= std::sin(0.5));

    CHECK_THROWS_AS(sin_enclosure({Rational(-1), Rational(1)}), std::invalid_argument);
}

TEST_CASE("cos_enclosure point values match the displayed truncations") {
    RatInterval at_one = cos_enclosure(RatInterval(Rational(1)));
    CHECK(at_one.lo == make_rational(389, 720));
    CHECK(at_one.hi == make_rational(13, 24));
    CHECK(at_one.contains(parse_rational("5403023058681398/10000000000000000")));

    RatInterval at_zero = cos_enclosure(RatInterval(Rational(0)));
    CHECK(at_zero.lo == Rational(1));
    CHECK(at_zero.hi == Rational(1));

    RatInterval unit = cos_enclosure({Rational(0), Rational(1)});
    CHECK(to_double(unit.lo) <= std::cos(1.0));
    CHECK(unit.hi >= Rational(1));

    CHECK_THROWS_AS(cos_enclosure({Rational(-1), Rational(0)}), std::invalid_argument);
}

TEST_CASE("property: enclosures contain the true values on [0, 4]") {
    TestRng rng(11);
    for (int i = 0; i < 10000; ++i) {
        Rational t = make_rational(rng.range(0, 4096), 1024);
        RatInterval s = sin_enclosure(RatInterval(t));
        RatInterval c = cos_enclosure(RatInterval(t));
        double tv = to_double(t);
        CHECK(to_double(s.lo) <= std::sin(tv) + 1e-15);
        CHECK(std::sin(tv) <= to_double(s.hi) + 1e-15);
        CHECK(to_double(c.lo) <= std::cos(tv) + 1e-15);
        CHECK(std::cos(tv) <= to_double(c.hi) + 1e-15);
    }
}

TEST_CASE("property: nested inputs give nested enclosures") {
    TestRng rng(12);
    for (int i = 0; i < 2000; ++i) {
        Rational a = make_rational(rng.range(0, 4000), 1000);
        Rational b = a + make_rational(rng.range(0, 4000), 1000);
        if (b > 4) b = Rational(4);
        Rational a2 = a + (b - a) * make_rational(rng.range(0, 16), 16);
        Rational b2 = b - (b - a2) * make_rational(rng.range(0, 16), 16);
        RatInterval outer(a, b), inner(a2, b2);
        REQUIRE(outer.contains(inner));
        CHECK(sin_enclosure(outer).contains(sin_enclosure(inner)));
        CHECK(cos_enclosure(outer).contains(cos_enclosure(inner)));
    }
}

TEST_CASE("adaptive ranges stay valid after argument reduction") {
    TestRng rng(13);
    for (int i = 0; i < 2000; ++i) {
        Rational t = make_rational(rng.range(0, 40000), 1000);  // up to 40
        RatInterval s = sin_range(RatInterval(t), 48);
        RatInterval c = cos_range(RatInterval(t), 48);
        double tv = to_double(t);
        CHECK(to_double(s.lo) <= std::sin(tv) + 1e-12);
        CHECK(std::sin(tv) <= to_double(s.hi) + 1e-12);
        CHECK(to_double(c.lo) <= std::cos(tv) + 1e-12);
        CHECK(std::cos(tv) <= to_double(c.hi) + 1e-12);
        // point enclosures at this precision are tight
        CHECK(to_double(s.hi) - to_double(s.lo) <= 1e-9);
        CHECK(to_double(c.hi) - to_double(c.lo) <= 1e-9);
    }
}

TEST_CASE("value_enclosure brackets floating evaluation") {
    TestRng rng(14);
    for (int i = 0; i < 300; ++i) {
        SinePoly p = random_sine_poly(1 + static_cast<int>(rng.below(6)), 9, rng.next());
        Rational x = make_rational(rng.range(0, 3141), 1000);
        RatInterval v = value_enclosure(p, RatInterval(x), 48);
        double truth = eval_float(p, to_double(x));
        CHECK(to_double(v.lo) <= truth + 1e-9);
        CHECK(truth <= to_double(v.hi) + 1e-9);
    }
}

TEST_CASE("taylor_minorant lies below the polynomial") {
    TestRng rng(15);
    for (int i = 0; i < 200; ++i) {
        SinePoly p = random_sine_poly(1 + static_cast<int>(rng.below(5)), 9, rng.next());
        Rational x_hi = make_rational(1 + rng.range(0, 1500), 1000);
        AlgPoly m = taylor_minorant(p, x_hi);
        for (int j = 0; j <= 40; ++j) {
            double x = to_double(x_hi) * j / 40;
            CHECK(m.eval_double(x) <= eval_float(p, x) + 1e-9);
        }
    }
}

TEST_CASE("branch_and_bound_nn on the named cases") {
    // quick proof on a region clear of interior zeros
    Verdict s = branch_and_bound_nn(sigma(4), Rational(0), make_rational(1, 2), 12);
    CHECK(s.status == Status::nonnegative);

    Verdict neg = branch_and_bound_nn(SinePoly({Rational(-1)}), make_rational(1, 4),
                                      make_rational(1, 2), 10);
    REQUIRE(neg.status == Status::negative);
    REQUIRE(neg.witness.has_value());
    CHECK(neg.witness_value_is_bound);
    CHECK(*neg.witness_value < 0);
    CHECK(eval_float(SinePoly({Rational(-1)}), to_double(*neg.witness)) < 0);

    // vanishes to high order at pi: anything but a negative verdict is fine
    Verdict phi3 = branch_and_bound_nn(phi(3), Rational(0), pi_upper(), 6);
    CHECK(phi3.status != Status::negative);

    // full-interval proof through the reflected sliver
    Verdict lukacs3 = branch_and_bound_nn(lukacs(3), Rational(0), pi_upper(), 12);
    CHECK(lukacs3.status == Status::nonnegative);

    CHECK(branch_and_bound_nn(SinePoly({Rational(0)}), Rational(0), Rational(1), 4).status ==
          Status::nonnegative);
    CHECK_THROWS_AS(branch_and_bound_nn(sigma(4), Rational(-1), Rational(1), 4),
                    std::invalid_argument);
}

TEST_CASE("branch_and_bound_nn for cosine polynomials") {
    // 1 + cos x: nonnegative with a tangency at pi
    Verdict v = branch_and_bound_nn(CosinePoly({Rational(1), Rational(1)}), Rational(0),
                                    pi_upper(), 12);
    CHECK(v.status != Status::negative);
    // 1/2 + cos x dips negative past 2pi/3
    Verdict neg = branch_and_bound_nn(CosinePoly({make_rational(1, 2), Rational(1)}), Rational(0),
                                      pi_upper(), 12);
    CHECK(neg.status == Status::negative);
    // constant
    CHECK(branch_and_bound_nn(CosinePoly({Rational(2)}), Rational(0), pi_upper(), 4).status ==
          Status::nonnegative);
}

TEST_CASE("property: interval prover never contradicts the exact certifier") {
    TestRng rng(16);
    for (int i = 0; i < 120; ++i) {
        SinePoly p = random_sine_poly(1 + static_cast<int>(rng.below(4)), 8, rng.next());
        Status exact = certify_sine(p, CertifyMethod::sturm).status;
        Status interval = branch_and_bound_nn(p, Rational(0), pi_upper(), 8).status;
        if (interval != Status::inconclusive) CHECK(interval == exact);
    }
}
