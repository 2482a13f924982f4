#include "trigcert/trigpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trigcert {

int SinePoly::effective_degree() const {
    int n = static_cast<int>(coeffs.size());
    while (n > 0 && sgn(coeffs[static_cast<size_t>(n - 1)]) == 0) --n;
    return n;
}

Rational SinePoly::coeff(int k) const {
    if (k < 1 || k > degree()) return Rational(0);
    return coeffs[static_cast<size_t>(k - 1)];
}

int CosinePoly::effective_degree() const {
    int n = static_cast<int>(coeffs.size());
    while (n > 1 && sgn(coeffs[static_cast<size_t>(n - 1)]) == 0) --n;
    return n - 1;
}

Rational CosinePoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs[static_cast<size_t>(k)];
}

AlgPoly sine_to_algebraic(const SinePoly& p) {
    if (p.coeffs.empty()) throw std::invalid_argument("sine_to_algebraic: empty coefficient list");
    const int n = p.effective_degree();
    if (n == 0) return AlgPoly();  // zero polynomial
    // U_0 = 1, U_1 = 2X, U_{j+1} = 2X*U_j - U_{j-1}; result = sum a_k U_{k-1}
    AlgPoly prev = AlgPoly::constant(Rational(1));
    AlgPoly cur = AlgPoly({Rational(0), Rational(2)});
    AlgPoly acc = prev * p.coeff(1);
    const AlgPoly two_x({Rational(0), Rational(2)});
    for (int k = 2; k <= n; ++k) {
        acc = acc + cur * p.coeff(k);
        AlgPoly next = two_x * cur - prev;
        prev = cur;
        cur = next;
    }
    return acc;
}

AlgPoly cosine_to_algebraic(const CosinePoly& p) {
    const int n = p.effective_degree();
    if (p.coeffs.empty()) return AlgPoly();
    // T_0 = 1, T_1 = X, T_{j+1} = 2X*T_j - T_{j-1}; result = sum a_k T_k
    AlgPoly prev = AlgPoly::constant(Rational(1));
    AlgPoly cur = AlgPoly({Rational(0), Rational(1)});
    AlgPoly acc = prev * p.coeff(0);
    const AlgPoly two_x({Rational(0), Rational(2)});
    for (int k = 1; k <= n; ++k) {
        acc = acc + cur * p.coeff(k);
        AlgPoly next = two_x * cur - prev;
        prev = cur;
        cur = next;
    }
    return acc;
}

SinePoly reflect(const SinePoly& p) {
    SinePoly q = p;
    for (size_t i = 1; i < q.coeffs.size(); i += 2) q.coeffs[i] = -q.coeffs[i];
    return q;
}

double eval_float(const SinePoly& p, double x) {
    double acc = 0.0;
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        acc += to_double(p.coeffs[i]) * std::sin(static_cast<double>(i + 1) * x);
    return acc;
}

double eval_float(const CosinePoly& p, double x) {
    double acc = 0.0;
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        acc += to_double(p.coeffs[i]) * std::cos(static_cast<double>(i) * x);
    return acc;
}

std::vector<Rational> parse_coeff_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("coefficients: empty list");
    return out;
}

std::string coeff_list_to_string(const std::vector<Rational>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += to_fraction_string(coeffs[i]);
    }
    return out;
}

}  // namespace trigcert
