// trigcert: exact nonnegativity certification for sine/cosine polynomials
// on [0, pi], coefficient criteria, named families, and the (kappa, lambda)
// region boundary. All certified arithmetic is exact rational; JSON output
// renders rationals as "p/q" strings.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigcert/certify.hpp"
#include "trigcert/criteria.hpp"
#include "trigcert/families.hpp"
#include "trigcert/oracle.hpp"
#include "trigcert/region.hpp"

using nlohmann::json;
using namespace trigcert;

namespace {

constexpr int kExitNonnegative = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitParse = 64;
constexpr int kExitIo = 65;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(to_fraction_string(q));
    return arr;
}

json verdict_to_json(const Verdict& v, bool x_space_witness) {
    json out;
    out["status"] = to_string(v.status);
    if (v.status == Status::negative) {
        if (x_space_witness) {
            out["witness_x_exact"] = to_fraction_string(*v.witness);
            out["witness_x"] = to_double(*v.witness);
            out["witness_value_upper"] = to_fraction_string(*v.witness_value);
        } else {
            out["witness_X"] = to_fraction_string(*v.witness);
            double X = std::min(1.0, std::max(-1.0, to_double(*v.witness)));
            out["witness_x"] = std::acos(X);
            out["witness_value"] = to_fraction_string(*v.witness_value);
        }
    }
    if (v.status == Status::nonnegative && v.certificate) {
        json cert;
        json roots = json::array();
        for (const auto& iv : v.certificate->root_intervals)
            roots.push_back({to_fraction_string(iv.lo), to_fraction_string(iv.hi)});
        cert["root_intervals"] = roots;
        json samples = json::array();
        for (const auto& [x, val] : v.certificate->samples)
            samples.push_back({{"x", to_fraction_string(x)}, {"value", to_fraction_string(val)}});
        cert["samples"] = samples;
        out["certificate"] = cert;
    }
    if (v.status == Status::inconclusive && v.exhausted_depth)
        out["max_depth"] = *v.exhausted_depth;
    return out;
}

json endpoint_to_json(const EndpointNecessity& e) {
    json out;
    out["first_sum"] = to_fraction_string(e.first_sum);
    out["condition"] = "first_sum >= 0";
    out["pass"] = e.pass;
    if (e.third_sum) {
        out["third_sum"] = to_fraction_string(*e.third_sum);
        out["third_condition"] = "third_sum <= 0";
        out["third_pass"] = *e.third_pass;
    }
    return out;
}

json criteria_to_json(const CriteriaReport& rep) {
    json out;
    out["belov_ok"] = rep.belov.ok;
    out["belov_partial_sums"] = rationals_to_json(rep.belov.partial_sums);
    if (rep.fejer_ok) out["fejer_ok"] = *rep.fejer_ok;
    else out["fejer_ok"] = nullptr;
    out["nec_at_0"] = endpoint_to_json(rep.necessity.at_zero);
    out["nec_at_pi"] = endpoint_to_json(rep.necessity.at_pi);
    out["necessary_pass"] = rep.necessity.pass();
    return out;
}

void emit(const json& doc, bool as_json) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // terse plain rendering: top-level key: value lines
    for (auto it = doc.begin(); it != doc.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
}

int status_exit_code(Status s) {
    switch (s) {
        case Status::nonnegative: return kExitNonnegative;
        case Status::negative: return kExitNegative;
        case Status::inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of nonnegative sine/cosine polynomials on [0, pi]"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    bool as_json = true;
    std::string tol_text = "1/1000000";
    int max_depth = 24;
    long seed = 42;
    app.add_flag("--json,!--no-json", as_json, "machine-readable JSON output (default on)");
    app.add_option("--tol", tol_text, "tolerance as an exact rational, e.g. 1/1000000");
    app.add_option("--max-depth", max_depth, "subdivision depth budget for the interval method");
    app.add_option("--seed", seed, "seed for test utilities");

    // certify
    auto* certify = app.add_subcommand("certify", "decide nonnegativity on [0, pi]");
    std::string certify_kind, certify_coeffs, certify_method = "sturm";
    certify->add_option("kind", certify_kind, "sine|cosine")->required();
    certify->add_option("coeffs", certify_coeffs, "comma-separated rationals, e.g. 5/4,1,1/4")
        ->required();
    certify->add_option("--method", certify_method, "sturm|interval");

    // criteria
    auto* criteria = app.add_subcommand("criteria", "coefficient criteria report");
    std::string criteria_coeffs;
    criteria->add_option("coeffs", criteria_coeffs, "comma-separated rationals")->required();

    // kappa0
    auto* kappa0_cmd = app.add_subcommand("kappa0", "boundary value kappa0(lambda; n)");
    int kappa0_n = 0;
    std::string kappa0_lambda;
    bool kappa0_force = false;
    kappa0_cmd->add_option("n", kappa0_n, "degree, n >= 3")->required();
    kappa0_cmd->add_option("lambda", kappa0_lambda, "exact rational")->required();
    kappa0_cmd->add_flag("--force-bisection", kappa0_force, "skip closed forms (cross-check)");

    // boundary
    auto* boundary = app.add_subcommand("boundary", "sweep the region boundary");
    int boundary_n = 0, boundary_steps = 0;
    std::string boundary_lo, boundary_hi, boundary_format = "csv", boundary_out;
    boundary->add_option("n", boundary_n)->required();
    boundary->add_option("lambda_lo", boundary_lo)->required();
    boundary->add_option("lambda_hi", boundary_hi)->required();
    boundary->add_option("steps", boundary_steps)->required();
    boundary->add_option("--format", boundary_format, "csv|svg");
    boundary->add_option("-o,--out", boundary_out, "output file path")->required();

    // characterize
    auto* characterize = app.add_subcommand("characterize", "exact low-degree characterizations");
    std::string chr_kind, chr_a, chr_b, chr_c;
    characterize->add_option("kind", chr_kind, "sine3|cosine2")->required();
    characterize->add_option("a", chr_a)->required();
    characterize->add_option("b", chr_b)->required();
    characterize->add_option("c", chr_c)->required();

    // family
    auto* family = app.add_subcommand("family", "named families: coefficients + certify + criteria");
    std::string family_id;
    family->add_option("id", family_id, "e.g. phi:5, sigma:6, theta-:2, kappa-lambda:4:1:1/2")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    Timer timer;
    json doc;
    int exit_code = 0;
    try {
        const Rational tol = parse_rational(tol_text);
        if (sgn(tol) <= 0) throw std::invalid_argument("--tol must be positive");

        if (*certify) {
            if (certify_kind != "sine" && certify_kind != "cosine")
                throw std::invalid_argument("certify: kind must be sine or cosine");
            if (certify_method != "sturm" && certify_method != "interval")
                throw std::invalid_argument("certify: method must be sturm or interval");
            CertifyMethod method =
                certify_method == "sturm" ? CertifyMethod::sturm : CertifyMethod::interval;
            std::vector<Rational> coeffs = parse_coeff_list(certify_coeffs);
            Verdict v = certify_kind == "sine"
                            ? certify_sine(SinePoly(coeffs), method, max_depth)
                            : certify_cosine(CosinePoly(coeffs), method, max_depth);
            doc = verdict_to_json(v, method == CertifyMethod::interval);
            doc["command"] = "certify";
            doc["kind"] = certify_kind;
            doc["coeffs"] = rationals_to_json(coeffs);
            doc["method"] = certify_method;
            exit_code = status_exit_code(v.status);
        } else if (*criteria) {
            std::vector<Rational> coeffs = parse_coeff_list(criteria_coeffs);
            doc = criteria_to_json(criteria_report(SinePoly(coeffs)));
            doc["command"] = "criteria";
            doc["coeffs"] = rationals_to_json(coeffs);
        } else if (*kappa0_cmd) {
            if (kappa0_n < 3) throw std::invalid_argument("kappa0: n must be >= 3");
            BoundaryPoint bp = kappa0(kappa0_n, parse_rational(kappa0_lambda), tol, kappa0_force);
            doc["command"] = "kappa0";
            doc["n"] = kappa0_n;
            doc["lambda"] = to_fraction_string(bp.lambda);
            doc["tol"] = to_fraction_string(tol);
            doc["kappa0_lo"] = to_fraction_string(bp.kappa0.lo);
            doc["kappa0_hi"] = to_fraction_string(bp.kappa0.hi);
            doc["method"] = to_string(bp.method);
        } else if (*boundary) {
            if (boundary_format != "csv" && boundary_format != "svg")
                throw std::invalid_argument("boundary: format must be csv or svg");
            auto points = boundary_sweep(boundary_n, parse_rational(boundary_lo),
                                         parse_rational(boundary_hi), boundary_steps, tol);
            std::ofstream out(boundary_out);
            if (!out) {
                std::cerr << "error: cannot open output path " << boundary_out << "\n";
                return kExitIo;
            }
            if (boundary_format == "csv") write_boundary_csv(out, points, tol);
            else write_boundary_svg(out, points);
            if (!out.good()) {
                std::cerr << "error: failed writing " << boundary_out << "\n";
                return kExitIo;
            }
            doc["command"] = "boundary";
            doc["n"] = boundary_n;
            doc["lambda_lo"] = boundary_lo;
            doc["lambda_hi"] = boundary_hi;
            doc["steps"] = boundary_steps;
            doc["tol"] = to_fraction_string(tol);
            doc["format"] = boundary_format;
            doc["out"] = boundary_out;
            doc["rows"] = points.size();
        } else if (*characterize) {
            Rational a = parse_rational(chr_a), b = parse_rational(chr_b), c = parse_rational(chr_c);
            CharacterizeDetail d;
            if (chr_kind == "sine3") d = degree3_characterize_detail(a, b, c);
            else if (chr_kind == "cosine2") d = cosine2_characterize_detail(a, b, c);
            else throw std::invalid_argument("characterize: kind must be sine3 or cosine2");
            doc["command"] = "characterize";
            doc["kind"] = chr_kind;
            doc["a"] = to_fraction_string(a);
            doc["b"] = to_fraction_string(b);
            doc["c"] = to_fraction_string(c);
            doc["nn"] = d.nn;
            doc["case"] = d.fired_case == 1 ? "i" : "ii";
            doc["decisive_value"] = to_fraction_string(d.decisive_value);
            if (chr_kind == "cosine2")
                doc["sine_reduction"] = rationals_to_json(cosine2_sine_reduction(a, b, c).coeffs);
        } else if (*family) {
            FamilyId id = parse_family_id(family_id);
            SinePoly p = id.build();
            doc["command"] = "family";
            doc["id"] = family_id;
            doc["family"] = id.name();
            doc["n"] = id.n;
            doc["coeffs"] = rationals_to_json(p.coeffs);
            doc["certify"] = verdict_to_json(certify_sine(p, CertifyMethod::sturm), false);
            doc["criteria"] = criteria_to_json(criteria_report(p));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    doc["timings_ms"] = timer.ms();
    emit(doc, as_json);
    return exit_code;
}
