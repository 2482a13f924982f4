#ifndef TRIGCERT_INTERVAL_HPP
#define TRIGCERT_INTERVAL_HPP

#include <algorithm>
#include <stdexcept>

#include "trigcert/poly.hpp"
#include "trigcert/rational.hpp"

namespace trigcert {

// Closed rational interval [lo, hi], lo <= hi.
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rational& point) : lo(point), hi(point) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator-() const { return {-hi, -lo}; }

    RatInterval operator*(const RatInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }

    RatInterval operator*(const Rational& c) const {
        if (sgn(c) >= 0) return {lo * c, hi * c};
        return {hi * c, lo * c};
    }

    RatInterval scaled(const Rational& c) const { return *this * c; }

    static RatInterval hull(const RatInterval& a, const RatInterval& b) {
        return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }

    // intersection; throws if empty
    RatInterval intersect(const RatInterval& o) const {
        Rational l = std::max(lo, o.lo), h = std::min(hi, o.hi);
        if (l > h) throw std::invalid_argument("RatInterval: empty intersection");
        return {l, h};
    }
};

// Range enclosure of a polynomial over an interval (interval Horner).
// Inclusion monotone: a subinterval never yields a wider result.
inline RatInterval interval_eval(const AlgPoly& p, const RatInterval& x) {
    RatInterval acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

}  // namespace trigcert

#endif
