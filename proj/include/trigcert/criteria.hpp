#ifndef TRIGCERT_CRITERIA_HPP
#define TRIGCERT_CRITERIA_HPP

#include <optional>
#include <vector>

#include "trigcert/rational.hpp"
#include "trigcert/trigpoly.hpp"

namespace trigcert {

// Endpoint necessity at x = 0 or x = pi. first_sum is the weighted
// first-order sum; when it vanishes, the third-order sum decides and is
// reported (third_sum is present exactly in that case).
struct EndpointNecessity {
    Rational first_sum;
    bool pass = false;
    std::optional<Rational> third_sum;
    std::optional<bool> third_pass;
};

struct NecessityReport {
    EndpointNecessity at_zero;
    EndpointNecessity at_pi;
    bool pass() const { return at_zero.pass && at_pi.pass; }
};

struct BelovResult {
    bool ok = false;
    std::vector<Rational> partial_sums;
};

struct CriteriaReport {
    BelovResult belov;
    std::optional<bool> fejer_ok;  // absent for fewer than two coefficients
    NecessityReport necessity;
};

// Alternating weighted partial-sum condition: coefficients must be positive,
// non-increasing, and every partial sum sum_{k<=m} (-1)^{k-1} k a_k must be
// nonnegative. Sufficient for nonnegativity of all partial sums of the sine
// (and cosine) polynomial.
BelovResult belov_condition(const std::vector<Rational>& a);

// Convexity criterion. The input is the displayed coefficient vector whose
// last entry is already halved; the test runs on b = (a_1..a_{n-1}, 2 a_n):
// positive, non-increasing (weakly), and convex. Sufficient for
// nonnegativity of the sine polynomial. Throws for fewer than 2 coefficients.
bool fejer_condition(const std::vector<Rational>& a);

// Exact necessary conditions at both endpoints of [0, pi]. At 0 the sine
// polynomial behaves like (sum k a_k) x - (sum k^3 a_k) x^3/6, so the first
// sum must be >= 0 and, when it vanishes, the third sum must be <= 0; the
// alternating analogues govern x = pi. Any failure certifies the polynomial
// is not nonnegative.
NecessityReport necessary_conditions(const SinePoly& p);

CriteriaReport criteria_report(const SinePoly& p);

// The classical positive non-increasing sequence 1, 1/2, 1/2, 3/8, 3/8, ...
// with a_{2k} = a_{2k+1} = (2k-1)!!/(2k)!!, indexed from a_1 for sine use.
std::vector<Rational> vietoris_coefficients(int n);

// True iff the alternating third-order sum of the phi(n) coefficients is
// exactly zero (holds for every odd n). Throws for even n.
bool identity_k3_check(int n);

}  // namespace trigcert

#endif
