#include "trigcert/poly.hpp"

#include <sstream>

namespace trigcert {

void AlgPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

AlgPoly AlgPoly::monomial(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return AlgPoly(std::move(v));
}

const Rational& AlgPoly::leading() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Rational AlgPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational AlgPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double AlgPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

AlgPoly AlgPoly::derivative() const {
    if (coeffs_.size() <= 1) return AlgPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return AlgPoly(std::move(d));
}

AlgPoly AlgPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return AlgPoly(std::move(v));
}

AlgPoly AlgPoly::operator+(const AlgPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return AlgPoly(std::move(v));
}

AlgPoly AlgPoly::operator-(const AlgPoly& o) const { return *this + (-o); }

AlgPoly AlgPoly::operator*(const AlgPoly& o) const {
    if (is_zero() || o.is_zero()) return AlgPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return AlgPoly(std::move(v));
}

AlgPoly AlgPoly::operator*(const Rational& c) const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
    return AlgPoly(std::move(v));
}

AlgPoly AlgPoly::divide_exact(const AlgPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("poly division by zero");
    std::vector<Rational> rem = coeffs_;
    int dd = divisor.degree();
    int qd = degree() - dd;
    if (qd < 0) {
        if (!is_zero()) throw std::invalid_argument("poly division: not divisible");
        return AlgPoly();
    }
    std::vector<Rational> quot(static_cast<size_t>(qd) + 1, Rational(0));
    for (int k = qd; k >= 0; --k) {
        Rational c = rem[static_cast<size_t>(k + dd)] / divisor.leading();
        quot[static_cast<size_t>(k)] = c;
        if (sgn(c) != 0)
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<size_t>(k + i)] -= c * divisor.coeffs()[static_cast<size_t>(i)];
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) throw std::invalid_argument("poly division: not divisible");
    return AlgPoly(std::move(quot));
}

AlgPoly AlgPoly::deflate_root(const Rational& r) const {
    if (is_zero()) return AlgPoly();
    // synthetic division; the final remainder must vanish
    std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
    Rational carry = coeffs_.back();
    for (int i = degree() - 1; i >= 0; --i) {
        q[static_cast<size_t>(i)] = carry;
        carry = coeffs_[static_cast<size_t>(i)] + carry * r;
    }
    if (sgn(carry) != 0) throw std::invalid_argument("deflate_root: r is not a root");
    return AlgPoly(std::move(q));
}

AlgPoly AlgPoly::scale_argument(const Rational& c) const {
    std::vector<Rational> v(coeffs_.size());
    Rational p(1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        v[i] = coeffs_[i] * p;
        p *= c;
    }
    return AlgPoly(std::move(v));
}

std::string AlgPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<size_t>(k)];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rational a = abs(c);
        if (k == 0 || a != 1) os << to_fraction_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace trigcert
