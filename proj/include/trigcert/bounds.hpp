#ifndef TRIGCERT_BOUNDS_HPP
#define TRIGCERT_BOUNDS_HPP

#include "trigcert/interval.hpp"
#include "trigcert/poly.hpp"
#include "trigcert/rational.hpp"
#include "trigcert/sturm.hpp"
#include "trigcert/trigpoly.hpp"

namespace trigcert {

// Fixed rational enclosure of pi: [355/113 - 1e-6, 355/113 + 1e-6]
// intersected with [3.14159265358979, 3.14159265358980].
const Rational& pi_lower();
const Rational& pi_upper();
RatInterval pi_enclosure();

// Truncated Taylor series of sin (odd order) and cos (even order). A
// truncation whose final term is negative is a global lower bound for
// t >= 0, one ending with a positive term a global upper bound (iterated
// integration of cos t <= 1), so:
//   sin: orders 3 mod 4 are lower bounds, 1 mod 4 upper bounds;
//   cos: orders 2 mod 4 are lower bounds, 0 mod 4 upper bounds.
AlgPoly sin_taylor(int order);
AlgPoly cos_taylor(int order);

// Enclosure of sin/cos over a nonnegative interval using the base
// truncations (sin: lower order 3, upper order 5; cos: lower order 6, upper
// order 4) evaluated by interval Horner and clamped to [-1, 1]. Inclusion
// monotone: nested inputs give nested outputs. Throws on t.lo < 0.
RatInterval sin_enclosure(const RatInterval& t);
RatInterval cos_enclosure(const RatInterval& t);

// Adaptive variants: escalate the truncation order until the series tail at
// t.hi is below 2^-prec_bits (or a cap is hit), reduce arguments mod 2*pi
// through the rational pi enclosure when t is large, and accept negative
// inputs by reflection. Always a valid enclosure; used by the interval
// prover, where the fixed base orders would be far too coarse.
RatInterval sin_range(const RatInterval& t, int prec_bits);
RatInterval cos_range(const RatInterval& t, int prec_bits);

// Certified enclosure of p(x) for x in the given interval (which may be a
// point), by summing per-term enclosures of a_k sin(kx) / a_k cos(kx).
RatInterval value_enclosure(const SinePoly& p, const RatInterval& x, int prec_bits = 48);
RatInterval value_enclosure(const CosinePoly& p, const RatInterval& x, int prec_bits = 48);

// Exact polynomial minorant of p on [0, x_hi]: each term uses the one-sided
// truncation matching its coefficient sign, so the result is <= p pointwise
// for all x >= 0.
AlgPoly taylor_minorant(const SinePoly& p, const Rational& x_hi);
AlgPoly taylor_minorant(const CosinePoly& p, const Rational& x_hi);

// Interval branch-and-bound nonnegativity prover on [lo, hi] intersected
// with [0, pi]. Subdivides until every leaf either has a certified
// nonnegative range enclosure or is absorbed by an exact Taylor-minorant
// nonnegativity proof (which handles the zeros sine polynomials are forced
// to have at 0 and pi). Returns `negative` only with a rational sample point
// whose value enclosure lies strictly below zero, and `inconclusive` when
// the depth budget runs out. Sound: never contradicts the exact certifier.
Verdict branch_and_bound_nn(const SinePoly& p, const Rational& lo, const Rational& hi,
                            int max_depth);
Verdict branch_and_bound_nn(const CosinePoly& p, const Rational& lo, const Rational& hi,
                            int max_depth);

// reflection partner of the sine version: coefficients of q(x) = p(pi - x)
CosinePoly reflect(const CosinePoly& p);

}  // namespace trigcert

#endif
