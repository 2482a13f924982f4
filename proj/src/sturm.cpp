#include "trigcert/sturm.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace trigcert {

const char* to_string(Status s) {
    switch (s) {
        case Status::nonnegative: return "nonnegative";
        case Status::negative: return "negative";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// Integer polynomials, constant term first, no trailing zeros.
using ZPoly = std::vector<Integer>;

void znormalize(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zderivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    return d;
}

// Strips the (positive) content; sign of the polynomial is preserved.
void zprimitivize(ZPoly& p) {
    znormalize(p);
    if (p.empty()) return;
    Integer g(0);
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g == 1) return;
    }
    for (auto& c : p) c /= g;
}

ZPoly zpoly_primitive(const AlgPoly& p) {
    Integer l(1);
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    ZPoly out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        Rational scaled = p.coeffs()[i] * Rational(l);
        out[i] = scaled.get_num();  // denominator is 1 by construction
    }
    zprimitivize(out);
    return out;
}

AlgPoly algpoly_from(const ZPoly& p) {
    std::vector<Rational> v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = Rational(p[i]);
    return AlgPoly(std::move(v));
}

// Pseudo-remainder of a by b. Each elimination step scales by lc(b), so the
// result equals lc(b)^steps * (a mod b); only the sign of that multiplier
// matters downstream and it is returned alongside.
std::pair<ZPoly, bool> zprem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    znormalize(r);
    const Integer& lead = b.back();
    int steps = 0;
    while (!r.empty() && zdeg(r) >= zdeg(b)) {
        int shift = zdeg(r) - zdeg(b);
        Integer top = r.back();
        for (auto& c : r) c *= lead;
        for (size_t i = 0; i < b.size(); ++i)
            r[static_cast<size_t>(shift) + i] -= top * b[i];
        znormalize(r);
        ++steps;
    }
    bool multiplier_negative = (sgn(lead) < 0) && (steps % 2 == 1);
    return {std::move(r), multiplier_negative};
}

// Sign of p at num/den with den > 0, via integer Horner.
int zsign_at(const ZPoly& p, const Integer& num, const Integer& den) {
    if (p.empty()) return 0;
    Integer acc = p.back();
    Integer dpow(1);
    for (int i = zdeg(p) - 1; i >= 0; --i) {
        dpow *= den;
        acc = acc * num + p[static_cast<size_t>(i)] * dpow;
    }
    return sgn(acc);
}

int zsign_at(const ZPoly& p, const Rational& x) { return zsign_at(p, x.get_num(), x.get_den()); }

// Plain PRS gcd of primitive integer polynomials (signs are irrelevant here).
ZPoly zgcd(ZPoly a, ZPoly b) {
    znormalize(a);
    znormalize(b);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprem(a, b).first;
        zprimitivize(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

AlgPoly squarefree_part(const AlgPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    ZPoly zp = zpoly_primitive(p);
    if (zdeg(zp) <= 1) return algpoly_from(zp);
    ZPoly g = zgcd(zp, zderivative(zp));
    if (zdeg(g) == 0) return algpoly_from(zp);
    AlgPoly sf = algpoly_from(zp).divide_exact(algpoly_from(g));
    return algpoly_from(zpoly_primitive(sf));
}

SturmChain::SturmChain(const AlgPoly& p) {
    squarefree_ = squarefree_part(p);
    ZPoly p0 = zpoly_primitive(squarefree_);
    chain_.push_back(p0);
    if (zdeg(p0) < 1) return;
    ZPoly p1 = zderivative(p0);
    zprimitivize(p1);
    chain_.push_back(p1);
    while (!chain_.back().empty() && zdeg(chain_.back()) > 0) {
        auto [r, mult_neg] = zprem(chain_[chain_.size() - 2], chain_.back());
        if (r.empty()) break;  // cannot happen for a squarefree base, kept as a guard
        if (!mult_neg)
            for (auto& c : r) c = -c;
        zprimitivize(r);
        chain_.push_back(std::move(r));
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int variations = 0;
    int prev = 0;
    for (const auto& q : chain_) {
        int s = zsign_at(q, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmChain::count_open(const Rational& lo, const Rational& hi) const {
    if (lo >= hi) return 0;
    assert(sign_at(lo) != 0 && sign_at(hi) != 0);
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::sign_at(const Rational& x) const { return zsign_at(chain_.front(), x); }

std::vector<AlgPoly> SturmChain::elements() const {
    std::vector<AlgPoly> out;
    out.reserve(chain_.size());
    for (const auto& q : chain_) out.push_back(algpoly_from(q));
    return out;
}

int count_roots(const AlgPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("count_roots: zero polynomial");
    if (lo >= hi) throw std::invalid_argument("count_roots: requires lo < hi");
    AlgPoly s = squarefree_part(p);
    int extra = 0;
    if (sgn(s(lo)) == 0) s = s.deflate_root(lo);  // open at lo: not counted
    if (sgn(s(hi)) == 0) {
        extra = 1;  // closed at hi
        s = s.deflate_root(hi);
    }
    if (s.degree() < 1) return extra;
    SturmChain chain(s);
    return chain.count_open(lo, hi) + extra;
}

namespace {

// exclude_lo/exclude_hi: the original endpoint was a (deflated) root of the
// target, so no emitted interval may touch it, or it would swallow that root
// and hide the sign regions around it.
void isolate_rec(const SturmChain& chain, const Rational& lo, const Rational& hi, int count,
                 const Rational& width, bool exclude_lo, bool exclude_hi,
                 std::vector<RatInterval>& out) {
    if (count == 0) return;
    if (count == 1 && hi - lo <= width && !exclude_lo && !exclude_hi) {
        out.emplace_back(lo, hi);
        return;
    }
    // split at a non-root interior point; nudge off exact roots if needed
    Rational mid = (lo + hi) / 2;
    Rational step = (hi - lo) / 8;
    while (chain.sign_at(mid) == 0) {
        mid += step;
        step /= 2;
    }
    int left = chain.count_open(lo, mid);
    isolate_rec(chain, lo, mid, left, width, exclude_lo, false, out);
    isolate_rec(chain, mid, hi, count - left, width, false, exclude_hi, out);
}

}  // namespace

RootIsolation isolate_roots(const AlgPoly& p, const Rational& lo, const Rational& hi,
                            const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (sgn(width) <= 0) throw std::invalid_argument("isolate_roots: width must be positive");
    if (lo > hi) throw std::invalid_argument("isolate_roots: lo > hi");
    RootIsolation iso;
    if (lo == hi) {
        if (sgn(p(lo)) == 0) iso.intervals.emplace_back(lo, lo);
        return iso;
    }
    AlgPoly s = squarefree_part(p);
    std::vector<RatInterval> out;
    bool lo_root = sgn(s(lo)) == 0;
    if (lo_root) {
        out.emplace_back(lo, lo);
        s = s.deflate_root(lo);
    }
    bool hi_root = !s.is_zero() && s.degree() >= 0 && sgn(s(hi)) == 0;
    if (hi_root) s = s.deflate_root(hi);
    if (s.degree() >= 1) {
        SturmChain chain(s);
        isolate_rec(chain, lo, hi, chain.count_open(lo, hi), width, lo_root, hi_root, out);
    }
    if (hi_root) out.emplace_back(hi, hi);
    std::sort(out.begin(), out.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    iso.intervals = std::move(out);
    return iso;
}

RootIsolation isolate_roots(const AlgPoly& p, const Rational& lo, const Rational& hi) {
    return isolate_roots(p, lo, hi, default_isolation_width());
}

Verdict is_nonneg_on(const AlgPoly& p, const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("is_nonneg_on: lo > hi");
    if (p.is_zero()) return Verdict::nonneg({});
    if (lo == hi) {
        Rational v = p(lo);
        if (sgn(v) < 0) return Verdict::neg(lo, v);
        return Verdict::nonneg({{}, {{lo, v}}});
    }
    // Between consecutive distinct roots the sign is constant, so one exact
    // sample per gap decides. Coarse isolation (separation only) suffices.
    RootIsolation iso = isolate_roots(p, lo, hi, hi - lo);
    std::vector<Rational> samples;
    samples.push_back(lo);
    const auto& iv = iso.intervals;
    if (!iv.empty()) {
        if (lo < iv.front().lo) samples.push_back((lo + iv.front().lo) / 2);
        for (size_t i = 0; i + 1 < iv.size(); ++i)
            samples.push_back((iv[i].hi + iv[i + 1].lo) / 2);
        if (iv.back().hi < hi) samples.push_back((iv.back().hi + hi) / 2);
    }
    samples.push_back(hi);
    NonnegCertificate cert;
    cert.root_intervals = iv;
    for (const auto& x : samples) {
        Rational v = p(x);
        if (sgn(v) < 0) return Verdict::neg(x, v);
        cert.samples.emplace_back(x, v);
    }
    return Verdict::nonneg(std::move(cert));
}

RatInterval min_enclosure(const AlgPoly& p, const Rational& lo, const Rational& hi,
                          const Rational& tol) {
    if (sgn(tol) <= 0) throw std::invalid_argument("min_enclosure: tol must be positive");
    if (lo > hi) throw std::invalid_argument("min_enclosure: lo > hi");
    if (p.is_zero()) return RatInterval(Rational(0));
    if (lo == hi || p.degree() == 0) return RatInterval(p(lo));

    std::vector<RatInterval> candidates;
    candidates.emplace_back(p(lo));
    candidates.emplace_back(p(hi));

    AlgPoly d = p.derivative();
    if (!d.is_zero()) {
        AlgPoly sd = squarefree_part(d);
        RootIsolation crit = isolate_roots(d, lo, hi, hi - lo);
        for (const auto& c : crit.intervals) {
            if (c.is_point()) {
                candidates.emplace_back(p(c.lo));
                continue;
            }
            // one simple root of sd inside; shrink the sign-change bracket
            // until the interval evaluation of p is tight enough
            Rational a = c.lo, b = c.hi;
            int sa = sgn(sd(a));
            RatInterval range = interval_eval(p, RatInterval(a, b));
            while (range.width() > tol) {
                Rational m = (a + b) / 2;
                int sm = sgn(sd(m));
                if (sm == 0) {  // exact rational critical point
                    range = RatInterval(p(m));
                    break;
                }
                if (sm == sa) a = m;
                else b = m;
                range = interval_eval(p, RatInterval(a, b));
            }
            candidates.push_back(range);
        }
    }
    RatInterval best = candidates.front();
    for (const auto& c : candidates) {
        best.lo = std::min(best.lo, c.lo);
        best.hi = std::min(best.hi, c.hi);
    }
    return best;
}

}  // namespace trigcert
