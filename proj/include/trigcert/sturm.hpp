#ifndef TRIGCERT_STURM_HPP
#define TRIGCERT_STURM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "trigcert/interval.hpp"
#include "trigcert/poly.hpp"
#include "trigcert/rational.hpp"

namespace trigcert {

enum class Status { nonnegative, negative, inconclusive };

const char* to_string(Status s);

// Disjoint rational intervals, each holding exactly one distinct real root.
// Degenerate (point) intervals mark exact rational roots.
struct RootIsolation {
    std::vector<RatInterval> intervals;
};

struct NonnegCertificate {
    std::vector<RatInterval> root_intervals;
    // sample points with their exact values, all >= 0
    std::vector<std::pair<Rational, Rational>> samples;
};

// Certified outcome of a nonnegativity decision. The Sturm engine never
// produces `inconclusive`; that value is reserved for the interval prover.
struct Verdict {
    Status status = Status::inconclusive;
    // exact point with a provably negative value; lives in X-space for
    // algebraic decisions and in x-space for the interval prover
    std::optional<Rational> witness;
    std::optional<Rational> witness_value;
    // when set, witness_value is a certified upper bound rather than the
    // exact value (the interval prover cannot evaluate sin exactly)
    bool witness_value_is_bound = false;
    std::optional<NonnegCertificate> certificate;
    std::optional<int> exhausted_depth;

    static Verdict nonneg(NonnegCertificate cert) {
        Verdict v;
        v.status = Status::nonnegative;
        v.certificate = std::move(cert);
        return v;
    }
    static Verdict neg(Rational at, Rational value, bool value_is_bound = false) {
        Verdict v;
        v.status = Status::negative;
        v.witness = std::move(at);
        v.witness_value = std::move(value);
        v.witness_value_is_bound = value_is_bound;
        return v;
    }
    static Verdict undecided(int depth) {
        Verdict v;
        v.status = Status::inconclusive;
        v.exhausted_depth = depth;
        return v;
    }
};

// Sturm sequence of the squarefree part of a target polynomial: p0 squarefree,
// p1 = p0', p_{i+1} = -rem(p_{i-1}, p_i), each element content-normalized to a
// primitive integer polynomial (a positive rescale, which preserves all signs).
class SturmChain {
public:
    explicit SturmChain(const AlgPoly& p);

    // sign variations of the chain at x, zeros skipped
    int variations_at(const Rational& x) const;
    // distinct real roots in the open interval (lo, hi); requires that
    // neither endpoint is a root of the squarefree part
    int count_open(const Rational& lo, const Rational& hi) const;

    const AlgPoly& squarefree() const { return squarefree_; }
    int sign_at(const Rational& x) const;  // sign of the squarefree part
    std::vector<AlgPoly> elements() const;

private:
    AlgPoly squarefree_;
    std::vector<std::vector<Integer>> chain_;  // primitive integer polynomials
};

// p / gcd(p, p'), content-normalized; same distinct real roots as p.
// Throws on the zero polynomial.
AlgPoly squarefree_part(const AlgPoly& p);

// Distinct real roots of p in (lo, hi]. Endpoint roots are handled by exact
// deflation, so no numeric perturbation is ever needed.
int count_roots(const AlgPoly& p, const Rational& lo, const Rational& hi);

inline Rational default_isolation_width() { return make_rational(1, 1L << 16); }

// Disjoint isolating intervals for the distinct roots of p in [lo, hi],
// refined to length <= width. Roots at lo/hi come back as point intervals.
RootIsolation isolate_roots(const AlgPoly& p, const Rational& lo, const Rational& hi,
                            const Rational& width);
RootIsolation isolate_roots(const AlgPoly& p, const Rational& lo, const Rational& hi);

// Complete decision procedure for p >= 0 on [lo, hi]. Either a certificate
// (root isolation plus nonnegative samples covering every sign region) or an
// exact rational witness with p(witness) < 0.
Verdict is_nonneg_on(const AlgPoly& p, const Rational& lo, const Rational& hi);

// Encloses min over [lo, hi] of p in a rational interval of width <= tol.
RatInterval min_enclosure(const AlgPoly& p, const Rational& lo, const Rational& hi,
                          const Rational& tol);

inline Rational default_min_enclosure_tol() { return make_rational(1, 1000000000L); }

}  // namespace trigcert

#endif
