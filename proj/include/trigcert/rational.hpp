#ifndef TRIGCERT_RATIONAL_HPP
#define TRIGCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace trigcert {

// Exact rational arithmetic is backed by GMP. mpq_class values are kept
// canonical (reduced, positive denominator) by every helper here; raw
// two-argument construction is funneled through make_rational so no
// uncanonicalized value escapes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p" with optional sign. Decimal notation is rejected:
// certified inputs must be exact.
Rational parse_rational(const std::string& text);

// "p/q" when q != 1, otherwise just "p".
std::string to_fraction_string(const Rational& q);

// Fixed-point decimal rendering with the given number of fractional digits,
// rounded to nearest (ties away from zero).
std::string to_decimal_string(const Rational& q, int digits);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

Rational rational_pow(const Rational& base, unsigned long exp);

// Number of fractional decimal digits needed to resolve tol, i.e. the least
// d with 10^-d <= tol, clamped to [1, 40].
int decimal_digits_for(const Rational& tol);

// Encloses sqrt(v) for v >= 0 in a rational interval of width <= width.
// Returned pair satisfies lo*lo <= v <= hi*hi and hi - lo <= width.
std::pair<Rational, Rational> sqrt_enclosure(const Rational& v, const Rational& width);

}  // namespace trigcert

#endif
