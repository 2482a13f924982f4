#ifndef TRIGCERT_TRIGPOLY_HPP
#define TRIGCERT_TRIGPOLY_HPP

#include <string>
#include <vector>

#include "trigcert/poly.hpp"
#include "trigcert/rational.hpp"

namespace trigcert {

// Sum a_k sin(kx), k = 1..n. coeffs[0] multiplies sin(x). Trailing zero
// coefficients are kept as stored degree; effective_degree() ignores them.
struct SinePoly {
    std::vector<Rational> coeffs;

    SinePoly() = default;
    explicit SinePoly(std::vector<Rational> c) : coeffs(std::move(c)) {}
    SinePoly(std::initializer_list<Rational> c) : coeffs(c) {}

    int degree() const { return static_cast<int>(coeffs.size()); }
    int effective_degree() const;
    bool is_zero() const { return effective_degree() == 0; }
    // coefficient of sin(kx), 1-based
    Rational coeff(int k) const;

    bool operator==(const SinePoly& o) const { return coeffs == o.coeffs; }
};

// Sum a_k cos(kx), k = 0..n. coeffs[0] is the constant term.
struct CosinePoly {
    std::vector<Rational> coeffs;

    CosinePoly() = default;
    explicit CosinePoly(std::vector<Rational> c) : coeffs(std::move(c)) {}
    CosinePoly(std::initializer_list<Rational> c) : coeffs(c) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    int effective_degree() const;
    // coefficient of cos(kx), 0-based
    Rational coeff(int k) const;

    bool operator==(const CosinePoly& o) const { return coeffs == o.coeffs; }
};

// Writes sum a_k sin(kx) = sin(x) * P(cos x) and returns P, built from the
// degree-two recurrence for second-kind Chebyshev polynomials. Exact at any
// degree. Throws on an empty coefficient list.
AlgPoly sine_to_algebraic(const SinePoly& p);

// Writes sum a_k cos(kx) = Q(cos x) and returns Q (first-kind Chebyshev).
AlgPoly cosine_to_algebraic(const CosinePoly& p);

// q(x) = p(pi - x): flips the sign of every even-index coefficient.
SinePoly reflect(const SinePoly& p);

// Floating evaluation; test/plot use only, never inside certified paths.
double eval_float(const SinePoly& p, double x);
double eval_float(const CosinePoly& p, double x);

// Comma-separated exact coefficients, e.g. "5/4,1,1,1/4".
std::vector<Rational> parse_coeff_list(const std::string& text);
std::string coeff_list_to_string(const std::vector<Rational>& coeffs);

}  // namespace trigcert

#endif
