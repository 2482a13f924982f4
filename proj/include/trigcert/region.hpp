#ifndef TRIGCERT_REGION_HPP
#define TRIGCERT_REGION_HPP

#include <iosfwd>
#include <vector>

#include "trigcert/rational.hpp"
#include "trigcert/sturm.hpp"
#include "trigcert/trigpoly.hpp"

namespace trigcert {

// Membership query for the nonnegativity region of (kappa, 1, ..., 1, lambda)
// sine polynomials of degree n.
struct RegionQuery {
    int n;
    Rational kappa;
    Rational lambda;
};

enum class BoundaryMethod { closed_form_line, closed_form_curve, bisection };

const char* to_string(BoundaryMethod m);

// One boundary sample: the least admissible kappa for this lambda, enclosed
// to the requested tolerance (exact closed forms give point enclosures).
struct BoundaryPoint {
    Rational lambda;
    RatInterval kappa0;
    BoundaryMethod method;
};

// Decides (kappa, lambda) membership by reducing the sine polynomial to its
// algebraic form and running the exact certifier on [-1, 1]. Negative
// verdicts carry an exact X-space witness.
Verdict membership(const RegionQuery& q);
Verdict membership(int n, const Rational& kappa, const Rational& lambda);

// The rectilinear boundary for the parity of n: (n+1)/2 - n*lambda for odd
// n, n*lambda - (n-2)/2 for even n. Exact necessary lower bound on kappa.
Rational parity_line(int n, const Rational& lambda);

// Exact-in-radicals curvilinear boundary for n = 4 on 0 < lambda <= 1/2,
// enclosed to width <= tol.
RatInterval radical_curve_n4(const Rational& lambda, const Rational& tol);

// Boundary value kappa0(lambda; n). Closed forms where available:
//   - odd n, lambda <= (2n-3)/(4n): the rectilinear line (exact);
//   - even n, lambda >= 1/2: the rectilinear line (exact);
//   - n = 3, lambda > 1/4: lambda + 1/(4*lambda) (exact);
//   - n = 4, 0 < lambda <= 1/2: the radical curve (enclosed to tol);
// everywhere else certified bisection against membership, bracketed from the
// parity line and halted at width <= tol. force_bisection skips the closed
// forms (used to cross-check them).
BoundaryPoint kappa0(int n, const Rational& lambda, const Rational& tol,
                     bool force_bisection = false);

std::vector<BoundaryPoint> boundary_sweep(int n, const Rational& lambda_lo,
                                          const Rational& lambda_hi, int steps,
                                          const Rational& tol);

// Exact decision for nonnegativity of (a, b, c) sine polynomials of degree 3
// and the equivalent quadratic-minimum case split. fired_case 1 corresponds
// to an endpoint minimum of the reduced quadratic, case 2 to an interior
// vertex minimum.
struct CharacterizeDetail {
    bool nn = false;
    int fired_case = 1;
    Rational decisive_value;  // the exact quantity whose sign decides
};

bool degree3_characterize(const Rational& a, const Rational& b, const Rational& c);
CharacterizeDetail degree3_characterize_detail(const Rational& a, const Rational& b,
                                               const Rational& c);

// Degree-2 cosine characterization via the exact reduction to the degree-3
// sine case with first coefficient 2a - c.
bool cosine2_characterize(const Rational& a, const Rational& b, const Rational& c);
CharacterizeDetail cosine2_characterize_detail(const Rational& a, const Rational& b,
                                               const Rational& c);
SinePoly cosine2_sine_reduction(const Rational& a, const Rational& b, const Rational& c);

// CSV: header "lambda,kappa0_lo,kappa0_hi,method", rationals rendered as
// decimals at tol precision. SVG: best-effort polyline of the midpoints.
void write_boundary_csv(std::ostream& os, const std::vector<BoundaryPoint>& points,
                        const Rational& tol);
void write_boundary_svg(std::ostream& os, const std::vector<BoundaryPoint>& points);

}  // namespace trigcert

#endif
