#ifndef TRIGCERT_POLY_HPP
#define TRIGCERT_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "trigcert/rational.hpp"

namespace trigcert {

// Dense univariate polynomial with exact rational coefficients, constant
// term first. The zero polynomial is the empty coefficient vector; any other
// value has a nonzero leading coefficient.
class AlgPoly {
public:
    AlgPoly() = default;
    AlgPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit AlgPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static AlgPoly constant(const Rational& c) { return AlgPoly({c}); }
    // X^k with unit coefficient
    static AlgPoly monomial(int k, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;
    Rational coeff(int k) const;

    Rational operator()(const Rational& x) const;  // exact Horner evaluation
    double eval_double(double x) const;

    AlgPoly derivative() const;
    AlgPoly operator-() const;
    AlgPoly operator+(const AlgPoly& o) const;
    AlgPoly operator-(const AlgPoly& o) const;
    AlgPoly operator*(const AlgPoly& o) const;
    AlgPoly operator*(const Rational& c) const;

    bool operator==(const AlgPoly& o) const { return coeffs_ == o.coeffs_; }

    // Quotient of exact division; throws if the remainder is nonzero.
    AlgPoly divide_exact(const AlgPoly& divisor) const;
    // Division by (X - r) assuming r is a root.
    AlgPoly deflate_root(const Rational& r) const;

    // p(c*X): substitutes a rational multiple of the variable.
    AlgPoly scale_argument(const Rational& c) const;

    std::string to_string(const std::string& var = "X") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

}  // namespace trigcert

#endif
