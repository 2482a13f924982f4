#include "trigcert/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace trigcert {

namespace {

RatInterval make_pi_enclosure() {
    Rational micro = make_rational(1, 1000000);
    Rational convergent = make_rational(355, 113);
    RatInterval coarse(convergent - micro, convergent + micro);
    RatInterval classical(parse_rational("314159265358979/100000000000000"),
                          parse_rational("314159265358980/100000000000000"));
    return coarse.intersect(classical);
}

Integer factorial(int n) {
    Integer f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

constexpr int kSinOrderCap = 59;  // orders 3 mod 4 up to 59, 1 mod 4 up to 57
constexpr int kCosOrderCap = 60;

AlgPoly build_sin_taylor(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    int s = 1;
    for (int j = 1; j <= order; j += 2) {
        c[static_cast<size_t>(j)] = make_rational(Integer(s), factorial(j));
        s = -s;
    }
    return AlgPoly(std::move(c));
}

AlgPoly build_cos_taylor(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    int s = 1;
    for (int j = 0; j <= order; j += 2) {
        c[static_cast<size_t>(j)] = make_rational(Integer(s), factorial(j));
        s = -s;
    }
    return AlgPoly(std::move(c));
}

const AlgPoly& sin_taylor_cached(int order) {
    static const std::vector<AlgPoly> table = [] {
        std::vector<AlgPoly> t(kSinOrderCap + 1);
        for (int o = 1; o <= kSinOrderCap; o += 2) t[static_cast<size_t>(o)] = build_sin_taylor(o);
        return t;
    }();
    return table[static_cast<size_t>(order)];
}

const AlgPoly& cos_taylor_cached(int order) {
    static const std::vector<AlgPoly> table = [] {
        std::vector<AlgPoly> t(kCosOrderCap + 1);
        for (int o = 0; o <= kCosOrderCap; o += 2) t[static_cast<size_t>(o)] = build_cos_taylor(o);
        return t;
    }();
    return table[static_cast<size_t>(order)];
}

Rational pow2_inverse(int bits) { return make_rational(Integer(1), Integer(1) << bits); }

// Escalates the truncation order until the first omitted term t^m/m! (the
// gap between consecutive one-sided truncations) drops below the threshold.
int escalate_order(int base, int cap, const Rational& t_hi, const Rational& threshold) {
    int order = base;
    Rational term = rational_pow(t_hi, static_cast<unsigned long>(base + 2)) /
                    Rational(factorial(base + 2));
    Rational t_sq = t_hi * t_hi;
    while (order + 4 <= cap && term > threshold) {
        term *= t_sq / Rational(static_cast<long>(order + 3) * (order + 4));
        term *= t_sq / Rational(static_cast<long>(order + 5) * (order + 6));
        order += 4;
    }
    return order;
}

RatInterval clamp_unit(Rational lo, Rational hi) {
    if (lo < -1) lo = Rational(-1);
    if (hi > 1) hi = Rational(1);
    return {lo, hi};
}

RatInterval sin_range_orders(const RatInterval& t, int lower_order, int upper_order) {
    Rational lo = interval_eval(sin_taylor_cached(lower_order), t).lo;
    Rational hi = interval_eval(sin_taylor_cached(upper_order), t).hi;
    return clamp_unit(std::move(lo), std::move(hi));
}

RatInterval cos_range_orders(const RatInterval& t, int lower_order, int upper_order) {
    Rational lo = interval_eval(cos_taylor_cached(lower_order), t).lo;
    Rational hi = interval_eval(cos_taylor_cached(upper_order), t).hi;
    return clamp_unit(std::move(lo), std::move(hi));
}

Integer rational_floor(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace

const Rational& pi_lower() {
    static const Rational v = make_pi_enclosure().lo;
    return v;
}

const Rational& pi_upper() {
    static const Rational v = make_pi_enclosure().hi;
    return v;
}

RatInterval pi_enclosure() { return {pi_lower(), pi_upper()}; }

AlgPoly sin_taylor(int order) {
    if (order < 1 || order % 2 == 0) throw std::invalid_argument("sin_taylor: order must be odd >= 1");
    if (order <= kSinOrderCap) return sin_taylor_cached(order);
    return build_sin_taylor(order);
}

AlgPoly cos_taylor(int order) {
    if (order < 0 || order % 2 == 1) throw std::invalid_argument("cos_taylor: order must be even >= 0");
    if (order <= kCosOrderCap) return cos_taylor_cached(order);
    return build_cos_taylor(order);
}

RatInterval sin_enclosure(const RatInterval& t) {
    if (sgn(t.lo) < 0) throw std::invalid_argument("sin_enclosure: negative input interval");
    return sin_range_orders(t, 3, 5);
}

RatInterval cos_enclosure(const RatInterval& t) {
    if (sgn(t.lo) < 0) throw std::invalid_argument("cos_enclosure: negative input interval");
    return cos_range_orders(t, 6, 4);
}

RatInterval sin_range(const RatInterval& t, int prec_bits) {
    if (sgn(t.lo) < 0) {
        if (sgn(t.hi) <= 0) {
            RatInterval r = sin_range({-t.hi, -t.lo}, prec_bits);
            return {-r.hi, -r.lo};
        }
        RatInterval neg = sin_range({Rational(0), -t.lo}, prec_bits);
        return RatInterval::hull({-neg.hi, -neg.lo}, sin_range({Rational(0), t.hi}, prec_bits));
    }
    if (t.hi > 8) {
        if (t.width() > 7) return {Rational(-1), Rational(1)};
        Rational two_pi_lo = 2 * pi_lower(), two_pi_hi = 2 * pi_upper();
        Integer j = rational_floor(t.lo / two_pi_hi);
        if (j >= 1) {
            // containment-preserving shift: lo drops by the larger 2*pi
            // bound, hi by the smaller, so the true residues stay inside
            RatInterval reduced(t.lo - Rational(j) * two_pi_hi, t.hi - Rational(j) * two_pi_lo);
            return sin_range(reduced, prec_bits);
        }
    }
    // No point resolving the series finer than the subdivision error of the
    // interval itself; widths and orders shrink together as nodes split.
    Rational threshold = pow2_inverse(prec_bits);
    Rational width_floor = t.width() / 32;
    if (width_floor > threshold) threshold = width_floor;
    int lower_order = escalate_order(3, kSinOrderCap, t.hi, threshold);
    int upper_order = escalate_order(5, kSinOrderCap - 2, t.hi, threshold);
    return sin_range_orders(t, lower_order, upper_order);
}

RatInterval cos_range(const RatInterval& t, int prec_bits) {
    if (sgn(t.lo) < 0) {
        // cos is even; fold the interval onto [0, max(|lo|, hi)]
        Rational folded = -t.lo;
        if (t.hi > folded) folded = t.hi;
        return cos_range({Rational(0), folded}, prec_bits);
    }
    if (t.hi > 8) {
        if (t.width() > 7) return {Rational(-1), Rational(1)};
        Rational two_pi_lo = 2 * pi_lower(), two_pi_hi = 2 * pi_upper();
        Integer j = rational_floor(t.lo / two_pi_hi);
        if (j >= 1) {
            RatInterval reduced(t.lo - Rational(j) * two_pi_hi, t.hi - Rational(j) * two_pi_lo);
            return cos_range(reduced, prec_bits);
        }
    }
    Rational threshold = pow2_inverse(prec_bits);
    Rational width_floor = t.width() / 32;
    if (width_floor > threshold) threshold = width_floor;
    int lower_order = escalate_order(6, kCosOrderCap, t.hi, threshold);
    int upper_order = escalate_order(4, kCosOrderCap - 2, t.hi, threshold);
    return cos_range_orders(t, lower_order, upper_order);
}

RatInterval value_enclosure(const SinePoly& p, const RatInterval& x, int prec_bits) {
    RatInterval acc;
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (sgn(p.coeffs[i]) == 0) continue;
        long k = static_cast<long>(i) + 1;
        acc = acc + sin_range(x * Rational(k), prec_bits) * p.coeffs[i];
    }
    return acc;
}

RatInterval value_enclosure(const CosinePoly& p, const RatInterval& x, int prec_bits) {
    RatInterval acc;
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (sgn(p.coeffs[i]) == 0) continue;
        long k = static_cast<long>(i);
        if (k == 0) {
            acc.lo += p.coeffs[i];
            acc.hi += p.coeffs[i];
            continue;
        }
        acc = acc + cos_range(x * Rational(k), prec_bits) * p.coeffs[i];
    }
    return acc;
}

namespace {

constexpr int kMinorantPrecBits = 20;

int minorant_order(const Rational& t_hi, int base, int cap) {
    return escalate_order(base, cap, t_hi, pow2_inverse(kMinorantPrecBits));
}

}  // namespace

AlgPoly taylor_minorant(const SinePoly& p, const Rational& x_hi) {
    AlgPoly acc;
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        const Rational& a = p.coeffs[i];
        if (sgn(a) == 0) continue;
        long k = static_cast<long>(i) + 1;
        Rational t_hi = x_hi * k;
        // positive coefficients take the lower truncation, negative the upper
        int order = sgn(a) > 0 ? minorant_order(t_hi, 3, 27) : minorant_order(t_hi, 5, 29);
        acc = acc + sin_taylor(order).scale_argument(Rational(k)) * a;
    }
    return acc;
}

AlgPoly taylor_minorant(const CosinePoly& p, const Rational& x_hi) {
    AlgPoly acc;
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        const Rational& a = p.coeffs[i];
        if (sgn(a) == 0) continue;
        long k = static_cast<long>(i);
        if (k == 0) {
            acc = acc + AlgPoly::constant(a);
            continue;
        }
        Rational t_hi = x_hi * k;
        int order = sgn(a) > 0 ? minorant_order(t_hi, 6, 26) : minorant_order(t_hi, 4, 28);
        acc = acc + cos_taylor(order).scale_argument(Rational(k)) * a;
    }
    return acc;
}

CosinePoly reflect(const CosinePoly& p) {
    CosinePoly q = p;
    for (size_t i = 1; i < q.coeffs.size(); i += 2) q.coeffs[i] = -q.coeffs[i];
    return q;
}

namespace {

enum class Node { accepted, negative, unknown };

template <class P>
int max_frequency(const P& p);

template <>
int max_frequency<SinePoly>(const SinePoly& p) {
    return p.effective_degree();
}

template <>
int max_frequency<CosinePoly>(const CosinePoly& p) {
    return std::max(p.effective_degree(), 1);
}

template <class P>
struct BnbContext {
    const P& poly;
    Rational seg_start;
    int max_depth;
    int prec_bits;
    int max_freq;
    std::optional<std::pair<Rational, Rational>> witness;  // x, certified upper bound

    bool certify_negative_at(const Rational& x) {
        for (int prec = prec_bits; prec <= prec_bits + 48; prec += 24) {
            RatInterval v = value_enclosure(poly, RatInterval(x), prec);
            if (sgn(v.hi) < 0) {
                witness = {x, v.hi};
                return true;
            }
        }
        return false;
    }

    Node run(const Rational& a, const Rational& b, int depth) {
        RatInterval range = value_enclosure(poly, {a, b}, prec_bits);
        if (sgn(range.lo) >= 0) return Node::accepted;
        Rational mid = (a + b) / 2;
        if (sgn(range.hi) < 0 && certify_negative_at(mid)) return Node::negative;
        // An exact polynomial minorant absorbs the forced zero at the
        // segment start, where constant range bounds can never close. Gated
        // to small frequency*width so the Sturm check stays low degree.
        if (a == seg_start && Rational(max_freq) * b <= 2) {
            AlgPoly minorant = taylor_minorant(poly, b);
            if (is_nonneg_on(minorant, a, b).status == Status::nonnegative) return Node::accepted;
        }
        if (depth >= max_depth) {
            // last-chance witness probe before giving up on this leaf
            if (certify_negative_at(mid)) return Node::negative;
            return Node::unknown;
        }
        Node left = run(a, mid, depth + 1);
        if (left == Node::negative) return Node::negative;
        Node right = run(mid, b, depth + 1);
        if (right == Node::negative) return Node::negative;
        if (left == Node::accepted && right == Node::accepted) return Node::accepted;
        return Node::unknown;
    }
};

template <class P>
bool all_zero(const P& p) {
    for (const auto& c : p.coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

template <class P>
Verdict bnb_impl(const P& p, const Rational& lo, const Rational& hi, int max_depth) {
    if (sgn(lo) < 0 || lo > hi || hi > pi_upper())
        throw std::invalid_argument("branch_and_bound_nn: interval must satisfy 0 <= lo <= hi <= pi");
    if (all_zero(p)) return Verdict::nonneg({});

    struct Segment {
        P poly;
        Rational a, b;
        bool reflected;
    };
    std::vector<Segment> segments;
    const Rational split = make_rational(157, 100);
    if (hi < pi_lower()) {
        segments.push_back({p, lo, hi, false});
    } else {
        // The claim reaches pi, where every sine polynomial vanishes and is
        // typically negative just beyond. Prove [lo, c] directly and hand
        // [c, pi] to the reflected polynomial on [0, pi_hi - c], whose only
        // forced zero sits at its left endpoint.
        Rational c = std::max(lo, split);
        if (lo < c) segments.push_back({p, lo, c, false});
        segments.push_back({reflect(p), Rational(0), pi_upper() - c, true});
    }

    bool undecided = false;
    for (const auto& seg : segments) {
        if (seg.a >= seg.b) continue;
        BnbContext<P> ctx{seg.poly, seg.a, max_depth, 48, max_frequency(seg.poly), {}};
        Node result = ctx.run(seg.a, seg.b, 0);
        if (result == Node::negative) {
            const auto& [u, bound] = *ctx.witness;
            if (!seg.reflected) return Verdict::neg(u, bound, true);
            // map the reflected witness back near pi - u
            BnbContext<P> direct{p, lo, max_depth, 96, max_frequency(p), {}};
            Rational near_pi = pi_lower() - u;
            std::vector<Rational> candidates{near_pi, near_pi - make_rational(1, 1 << 20)};
            bool mapped = false;
            for (const Rational& cand : candidates) {
                if (cand >= lo && cand <= pi_upper() && direct.certify_negative_at(cand)) {
                    mapped = true;
                    break;
                }
            }
            if (mapped) return Verdict::neg(direct.witness->first, direct.witness->second, true);
            undecided = true;
        } else if (result == Node::unknown) {
            undecided = true;
        }
    }
    if (undecided) return Verdict::undecided(max_depth);
    return Verdict::nonneg({});
}

}  // namespace

Verdict branch_and_bound_nn(const SinePoly& p, const Rational& lo, const Rational& hi,
                            int max_depth) {
    return bnb_impl(p, lo, hi, max_depth);
}

Verdict branch_and_bound_nn(const CosinePoly& p, const Rational& lo, const Rational& hi,
                            int max_depth) {
    return bnb_impl(p, lo, hi, max_depth);
}

}  // namespace trigcert
