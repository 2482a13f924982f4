// Python bindings for the certification core. Exact rationals cross the
// boundary as "p/q" strings; floats are provided alongside for convenience.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trigcert/certify.hpp"
#include "trigcert/criteria.hpp"
#include "trigcert/families.hpp"
#include "trigcert/oracle.hpp"
#include "trigcert/region.hpp"

namespace py = pybind11;
using namespace trigcert;

namespace {

std::vector<Rational> to_rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_rational(t));
    return out;
}

std::vector<std::string> from_rationals(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_fraction_string(v));
    return out;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["status"] = std::string(to_string(v.status));
    if (v.witness) {
        d["witness"] = to_fraction_string(*v.witness);
        d["witness_float"] = to_double(*v.witness);
        d["witness_value"] = to_fraction_string(*v.witness_value);
        d["witness_value_is_bound"] = v.witness_value_is_bound;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_trigcert, m) {
    m.doc() = "exact nonnegativity certification for sine/cosine polynomials on [0, pi]";

    m.def(
        "certify_sine",
        [](const std::vector<std::string>& coeffs, const std::string& method, int max_depth) {
            CertifyMethod cm = method == "interval" ? CertifyMethod::interval : CertifyMethod::sturm;
            return verdict_dict(certify_sine(SinePoly(to_rationals(coeffs)), cm, max_depth));
        },
        py::arg("coeffs"), py::arg("method") = "sturm", py::arg("max_depth") = 24,
        "Decide nonnegativity of sum a_k sin(kx) on [0, pi].");

    m.def(
        "certify_cosine",
        [](const std::vector<std::string>& coeffs, const std::string& method, int max_depth) {
            CertifyMethod cm = method == "interval" ? CertifyMethod::interval : CertifyMethod::sturm;
            return verdict_dict(certify_cosine(CosinePoly(to_rationals(coeffs)), cm, max_depth));
        },
        py::arg("coeffs"), py::arg("method") = "sturm", py::arg("max_depth") = 24,
        "Decide nonnegativity of sum a_k cos(kx) on [0, pi].");

    m.def(
        "criteria",
        [](const std::vector<std::string>& coeffs) {
            CriteriaReport rep = criteria_report(SinePoly(to_rationals(coeffs)));
            py::dict d;
            d["belov_ok"] = rep.belov.ok;
            d["belov_partial_sums"] = from_rationals(rep.belov.partial_sums);
            if (rep.fejer_ok) d["fejer_ok"] = *rep.fejer_ok;
            else d["fejer_ok"] = py::none();
            auto endpoint = [](const EndpointNecessity& e) {
                py::dict out;
                out["first_sum"] = to_fraction_string(e.first_sum);
                out["condition"] = "first_sum >= 0";
                out["pass"] = e.pass;
                if (e.third_sum) {
                    out["third_sum"] = to_fraction_string(*e.third_sum);
                    out["third_condition"] = "third_sum <= 0";
                    out["third_pass"] = *e.third_pass;
                }
                return out;
            };
            d["nec_at_0"] = endpoint(rep.necessity.at_zero);
            d["nec_at_pi"] = endpoint(rep.necessity.at_pi);
            d["necessary_pass"] = rep.necessity.pass();
            return d;
        },
        py::arg("coeffs"), "Coefficient criteria report for a sine polynomial.");

    m.def(
        "family",
        [](const std::string& id) {
            FamilyId fid = parse_family_id(id);
            return from_rationals(fid.build().coeffs);
        },
        py::arg("id"), "Coefficients of a named family, e.g. phi:5 or kappa-lambda:4:1:1/2.");

    m.def(
        "membership",
        [](int n, const std::string& kappa, const std::string& lambda) {
            return verdict_dict(membership(n, parse_rational(kappa), parse_rational(lambda)));
        },
        py::arg("n"), py::arg("kappa"), py::arg("lambda_"),
        "Membership of (kappa, lambda) in the degree-n nonnegativity region.");

    m.def(
        "kappa0",
        [](int n, const std::string& lambda, const std::string& tol, bool force_bisection) {
            BoundaryPoint bp = kappa0(n, parse_rational(lambda), parse_rational(tol), force_bisection);
            py::dict d;
            d["lambda"] = to_fraction_string(bp.lambda);
            d["kappa0_lo"] = to_fraction_string(bp.kappa0.lo);
            d["kappa0_hi"] = to_fraction_string(bp.kappa0.hi);
            d["kappa0_float"] = to_double(bp.kappa0.mid());
            d["method"] = std::string(to_string(bp.method));
            return d;
        },
        py::arg("n"), py::arg("lambda_"), py::arg("tol") = "1/1000000",
        py::arg("force_bisection") = false, "Boundary value kappa0(lambda; n).");

    m.def(
        "boundary_sweep",
        [](int n, const std::string& lo, const std::string& hi, int steps, const std::string& tol) {
            auto points = boundary_sweep(n, parse_rational(lo), parse_rational(hi), steps,
                                         parse_rational(tol));
            py::list out;
            for (const auto& bp : points) {
                py::dict d;
                d["lambda"] = to_fraction_string(bp.lambda);
                d["kappa0_lo"] = to_fraction_string(bp.kappa0.lo);
                d["kappa0_hi"] = to_fraction_string(bp.kappa0.hi);
                d["method"] = std::string(to_string(bp.method));
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("lambda_lo"), py::arg("lambda_hi"), py::arg("steps"),
        py::arg("tol") = "1/1000000");

    m.def(
        "characterize_sine3",
        [](const std::string& a, const std::string& b, const std::string& c) {
            return degree3_characterize(parse_rational(a), parse_rational(b), parse_rational(c));
        },
        py::arg("a"), py::arg("b"), py::arg("c"),
        "Exact nonnegativity of a sin x + b sin 2x + c sin 3x.");

    m.def(
        "characterize_cosine2",
        [](const std::string& a, const std::string& b, const std::string& c) {
            return cosine2_characterize(parse_rational(a), parse_rational(b), parse_rational(c));
        },
        py::arg("a"), py::arg("b"), py::arg("c"),
        "Exact nonnegativity of a + b cos x + c cos 2x.");

    m.def(
        "sin_enclosure",
        [](const std::string& lo, const std::string& hi) {
            RatInterval r = sin_enclosure({parse_rational(lo), parse_rational(hi)});
            return py::make_tuple(to_fraction_string(r.lo), to_fraction_string(r.hi));
        },
        py::arg("lo"), py::arg("hi"));

    m.def(
        "cos_enclosure",
        [](const std::string& lo, const std::string& hi) {
            RatInterval r = cos_enclosure({parse_rational(lo), parse_rational(hi)});
            return py::make_tuple(to_fraction_string(r.lo), to_fraction_string(r.hi));
        },
        py::arg("lo"), py::arg("hi"));

    m.def(
        "eval_sine",
        [](const std::vector<std::string>& coeffs, double x) {
            return eval_float(SinePoly(to_rationals(coeffs)), x);
        },
        py::arg("coeffs"), py::arg("x"));

    m.attr("__version__") = "0.1.0";
}
