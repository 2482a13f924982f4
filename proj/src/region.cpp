#include "trigcert/region.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "trigcert/families.hpp"

namespace trigcert {

const char* to_string(BoundaryMethod m) {
    switch (m) {
        case BoundaryMethod::closed_form_line: return "closed_form_line";
        case BoundaryMethod::closed_form_curve: return "closed_form_curve";
        case BoundaryMethod::bisection: return "bisection";
    }
    return "?";
}

Verdict membership(const RegionQuery& q) {
    SinePoly p = kappa_lambda(q.n, q.kappa, q.lambda);
    AlgPoly reduced = sine_to_algebraic(p);
    return is_nonneg_on(reduced, Rational(-1), Rational(1));
}

Verdict membership(int n, const Rational& kappa, const Rational& lambda) {
    return membership(RegionQuery{n, kappa, lambda});
}

Rational parity_line(int n, const Rational& lambda) {
    if (n % 2 == 1) return make_rational(n + 1, 2) - Rational(n) * lambda;
    return Rational(n) * lambda - make_rational(n - 2, 2);
}

RatInterval radical_curve_n4(const Rational& lambda, const Rational& tol) {
    if (sgn(lambda) <= 0) throw std::invalid_argument("radical_curve_n4: lambda must be positive");
    if (sgn(tol) <= 0) throw std::invalid_argument("radical_curve_n4: tol must be positive");
    Rational u = 6 * lambda * lambda - 3 * lambda + 1;
    Rational v = u * u * u;
    Rational denom = 27 * lambda * lambda;
    auto [root_lo, root_hi] = sqrt_enclosure(v, tol * denom / 4);
    Rational base = 9 * lambda * lambda + 9 * lambda - 2;
    return {(base + 2 * root_lo) / denom, (base + 2 * root_hi) / denom};
}

namespace {

BoundaryPoint bisect_kappa0(int n, const Rational& lambda, const Rational& tol) {
    const Rational line = parity_line(n, lambda);
    Rational lo = line - 1;
    if (sgn(lo) < 0) lo = 0;
    if (membership(n, lo, lambda).status != Status::negative)
        throw std::logic_error("kappa0: lower bracket unexpectedly inside the region");
    Rational hi = line + 2;
    if (hi < lo + 2) hi = lo + 2;
    Rational step(2);
    int guard = 0;
    while (membership(n, hi, lambda).status == Status::negative) {
        lo = hi;
        hi += step;
        step *= 2;
        if (++guard > 64) throw std::runtime_error("kappa0: no admissible kappa found");
    }
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (membership(n, mid, lambda).status == Status::nonnegative) hi = mid;
        else lo = mid;
    }
    return {lambda, RatInterval(lo, hi), BoundaryMethod::bisection};
}

}  // namespace

BoundaryPoint kappa0(int n, const Rational& lambda, const Rational& tol, bool force_bisection) {
    if (n < 3) throw std::invalid_argument("kappa0: n must be >= 3");
    if (sgn(tol) <= 0) throw std::invalid_argument("kappa0: tol must be positive");
    if (!force_bisection) {
        const bool odd = (n % 2 == 1);
        if (odd && lambda <= make_rational(2L * n - 3, 4L * n))
            return {lambda, RatInterval(parity_line(n, lambda)), BoundaryMethod::closed_form_line};
        if (!odd && lambda >= make_rational(1, 2))
            return {lambda, RatInterval(parity_line(n, lambda)), BoundaryMethod::closed_form_line};
        if (n == 3)  // here lambda > 1/4, so the curve branch applies
            return {lambda, RatInterval(lambda + make_rational(1, 4) / lambda),
                    BoundaryMethod::closed_form_curve};
        if (n == 4 && sgn(lambda) > 0 && lambda <= make_rational(1, 2))
            return {lambda, radical_curve_n4(lambda, tol), BoundaryMethod::closed_form_curve};
    }
    return bisect_kappa0(n, lambda, tol);
}

std::vector<BoundaryPoint> boundary_sweep(int n, const Rational& lambda_lo,
                                          const Rational& lambda_hi, int steps,
                                          const Rational& tol) {
    if (steps < 2) throw std::invalid_argument("boundary_sweep: steps must be >= 2");
    if (lambda_lo > lambda_hi) throw std::invalid_argument("boundary_sweep: invalid range");
    std::vector<BoundaryPoint> out;
    out.reserve(static_cast<size_t>(steps));
    Rational span = lambda_hi - lambda_lo;
    for (int i = 0; i < steps; ++i) {
        Rational lambda = lambda_lo + span * Rational(i) / Rational(steps - 1);
        out.push_back(kappa0(n, lambda, tol));
    }
    return out;
}

bool degree3_characterize(const Rational& a, const Rational& b, const Rational& c) {
    return degree3_characterize_detail(a, b, c).nn;
}

CharacterizeDetail degree3_characterize_detail(const Rational& a, const Rational& b,
                                               const Rational& c) {
    CharacterizeDetail d;
    Rational abs_b = abs(b);
    if (abs_b >= 4 * c) {  // c <= 0 always lands here
        d.fired_case = 1;
        d.decisive_value = a - 2 * abs_b + 3 * c;
    } else {  // |b| < 4c forces c > 0; interior vertex of the reduced quadratic
        d.fired_case = 2;
        d.decisive_value = a - c - b * b / (4 * c);
    }
    d.nn = sgn(d.decisive_value) >= 0;
    return d;
}

SinePoly cosine2_sine_reduction(const Rational& a, const Rational& b, const Rational& c) {
    return SinePoly({2 * a - c, b, c});
}

bool cosine2_characterize(const Rational& a, const Rational& b, const Rational& c) {
    return cosine2_characterize_detail(a, b, c).nn;
}

CharacterizeDetail cosine2_characterize_detail(const Rational& a, const Rational& b,
                                               const Rational& c) {
    CharacterizeDetail d;
    Rational abs_b = abs(b);
    if (abs_b >= 4 * c) {
        d.fired_case = 1;
        d.decisive_value = a - abs_b + c;
    } else {
        d.fired_case = 2;
        d.decisive_value = a - c - b * b / (8 * c);
    }
    d.nn = sgn(d.decisive_value) >= 0;
    return d;
}

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryPoint>& points,
                        const Rational& tol) {
    int digits = decimal_digits_for(tol) + 1;
    os << "lambda,kappa0_lo,kappa0_hi,method\n";
    for (const auto& p : points) {
        os << to_decimal_string(p.lambda, digits) << ","
           << to_decimal_string(p.kappa0.lo, digits) << ","
           << to_decimal_string(p.kappa0.hi, digits) << "," << to_string(p.method) << "\n";
    }
}

void write_boundary_svg(std::ostream& os, const std::vector<BoundaryPoint>& points) {
    const double width = 640, height = 480, margin = 48;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& p : points) {
        double x = to_double(p.lambda);
        double y = to_double(p.kappa0.mid());
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    auto sy = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
       << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
       << height - margin << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << margin << "\" y=\"" << height - margin / 4 << "\" font-size=\"12\">lambda in ["
       << xmin << ", " << xmax << "], kappa0 in [" << ymin << ", " << ymax << "]</text>\n";
    os << "  <polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : points)
        os << sx(to_double(p.lambda)) << "," << sy(to_double(p.kappa0.mid())) << " ";
    os << "\"/>\n</svg>\n";
}

}  // namespace trigcert
