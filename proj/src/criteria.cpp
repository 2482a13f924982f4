#include "trigcert/criteria.hpp"

#include <stdexcept>

#include "trigcert/families.hpp"

namespace trigcert {

BelovResult belov_condition(const std::vector<Rational>& a) {
    if (a.empty()) throw std::invalid_argument("belov_condition: empty list");
    BelovResult res;
    res.ok = true;
    Rational sum(0);
    for (size_t i = 0; i < a.size(); ++i) {
        long k = static_cast<long>(i) + 1;
        sum += Rational(k % 2 == 1 ? k : -k) * a[i];
        res.partial_sums.push_back(sum);
        if (sgn(a[i]) <= 0) res.ok = false;                 // positivity
        if (i > 0 && a[i] > a[i - 1]) res.ok = false;       // non-increasing
        if (sgn(sum) < 0) res.ok = false;                   // partial sums
    }
    return res;
}

bool fejer_condition(const std::vector<Rational>& a) {
    if (a.size() < 2) throw std::invalid_argument("fejer_condition: needs at least 2 coefficients");
    std::vector<Rational> b = a;
    b.back() *= 2;
    for (size_t i = 0; i < b.size(); ++i) {
        if (sgn(b[i]) <= 0) return false;
        if (i > 0 && b[i] > b[i - 1]) return false;
    }
    for (size_t k = 0; k + 2 < b.size(); ++k)
        if (b[k] + b[k + 2] < 2 * b[k + 1]) return false;
    return true;
}

namespace {

EndpointNecessity endpoint_necessity(const Rational& first, const Rational& third) {
    EndpointNecessity e;
    e.first_sum = first;
    if (sgn(first) != 0) {
        e.pass = sgn(first) > 0;
        return e;
    }
    e.third_sum = third;
    e.third_pass = sgn(third) <= 0;
    e.pass = *e.third_pass;
    return e;
}

}  // namespace

NecessityReport necessary_conditions(const SinePoly& p) {
    Rational s1(0), s3(0), s1_pi(0), s3_pi(0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        long k = static_cast<long>(i) + 1;
        Rational kq(k);
        Rational k3 = kq * kq * kq;
        const Rational& a = p.coeffs[i];
        s1 += kq * a;
        s3 += k3 * a;
        int alt = (k % 2 == 1) ? 1 : -1;
        s1_pi += Rational(alt) * kq * a;
        s3_pi += Rational(alt) * k3 * a;
    }
    NecessityReport rep;
    rep.at_zero = endpoint_necessity(s1, s3);
    rep.at_pi = endpoint_necessity(s1_pi, s3_pi);
    return rep;
}

CriteriaReport criteria_report(const SinePoly& p) {
    CriteriaReport rep;
    rep.belov = belov_condition(p.coeffs);
    if (p.coeffs.size() >= 2) rep.fejer_ok = fejer_condition(p.coeffs);
    rep.necessity = necessary_conditions(p);
    return rep;
}

std::vector<Rational> vietoris_coefficients(int n) {
    if (n < 1) throw std::invalid_argument("vietoris_coefficients: n must be >= 1");
    std::vector<Rational> out;
    out.emplace_back(1);
    Rational c(1);
    long k = 1;
    while (static_cast<int>(out.size()) < n) {
        c *= make_rational(2 * k - 1, 2 * k);
        out.push_back(c);
        if (static_cast<int>(out.size()) < n) out.push_back(c);
        ++k;
    }
    return out;
}

bool identity_k3_check(int n) {
    if (n % 2 == 0) throw std::invalid_argument("identity_k3_check: n must be odd");
    SinePoly p = phi(n);
    Rational sum(0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        long k = static_cast<long>(i) + 1;
        Rational k3 = Rational(k) * Rational(k) * Rational(k);
        sum += Rational(k % 2 == 1 ? 1 : -1) * k3 * p.coeffs[i];
    }
    return sgn(sum) == 0;
}

}  // namespace trigcert
