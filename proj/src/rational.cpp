#include "trigcert/rational.hpp"

#include <cctype>

namespace trigcert {

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw std::invalid_argument("rational: decimal notation rejected, use p/q: \"" + text + "\"");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(s);
            return Rational(n);
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse \"" + text + "\"");
    }
}

std::string to_fraction_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 0) digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer num = abs(q.get_num()) * scale;
    const Integer& den = q.get_den();
    // round to nearest, ties away from zero
    Integer scaled = (2 * num + den) / (2 * den);
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string out;
    if (sgn(q) < 0 && (whole != 0 || frac != 0)) out += "-";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    return out;  // power of a canonical value is canonical
}

int decimal_digits_for(const Rational& tol) {
    if (sgn(tol) <= 0) return 40;
    Rational p(1);
    for (int d = 0; d <= 40; ++d) {
        if (p <= tol) return d < 1 ? 1 : d;
        p /= 10;
    }
    return 40;
}

std::pair<Rational, Rational> sqrt_enclosure(const Rational& v, const Rational& width) {
    if (sgn(v) < 0) throw std::invalid_argument("sqrt_enclosure: negative argument");
    if (sgn(width) <= 0) throw std::invalid_argument("sqrt_enclosure: width must be positive");
    if (sgn(v) == 0) return {Rational(0), Rational(0)};
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^k until the integer sqrt bracket
    // [isqrt, isqrt+1] is tight enough.
    const Integer& p = v.get_num();
    const Integer& q = v.get_den();
    Integer m = p * q;
    unsigned long k = 0;
    for (;;) {
        Integer scaled = m << (2 * k);
        Integer r = sqrt(scaled);  // floor square root
        Integer den = q;
        den <<= k;
        Rational lo = make_rational(r, den);
        Rational hi = make_rational(r + 1, den);
        if (hi - lo <= width) return {lo, hi};
        k += 8;
    }
}

}  // namespace trigcert
