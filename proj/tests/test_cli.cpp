#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "cli_runner.hpp"

using nlohmann::json;

namespace {

json parse_output(const CliResult& r) {
    REQUIRE_MESSAGE(!r.output.empty(), "no CLI output");
    return json::parse(r.output);
}

double fraction_to_double(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return std::stod(text);
    return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
}

}  // namespace

TEST_CASE("certify exit codes and JSON schema") {
    CliResult nn = run_cli("certify sine \"5/4,1,1/4\"");
    CHECK(nn.exit_code == 0);
    json doc = parse_output(nn);
    CHECK(doc["command"] == "certify");
    CHECK(doc["status"] == "nonnegative");
    CHECK(doc["coeffs"] == json::array({"5/4", "1", "1/4"}));
    CHECK(doc.contains("certificate"));
    CHECK(doc.contains("timings_ms"));

    CliResult neg = run_cli("certify sine \"1,1,1,3/5\"");
    CHECK(neg.exit_code == 1);
    json nd = parse_output(neg);
    CHECK(nd["status"] == "negative");
    CHECK(nd["witness_X"] == "-1");
    CHECK(nd["witness_value"] == "-2/5");
    CHECK(nd["witness_x"].get<double>() == doctest::Approx(3.14159265).epsilon(1e-6));

    CliResult zero = run_cli("certify sine \"0\"");
    CHECK(zero.exit_code == 0);
    CHECK(parse_output(zero)["status"] == "nonnegative");

    CliResult cosine = run_cli("certify cosine \"1,1\"");
    CHECK(cosine.exit_code == 0);

    // interval method: inconclusive cases exit 2
    CliResult inconclusive = run_cli("certify sine \"1,1,1,1/2\" --method interval --max-depth 6");
    CHECK(inconclusive.exit_code == 2);
    CHECK(parse_output(inconclusive)["status"] == "inconclusive");

    CliResult int_neg = run_cli("certify sine \"-1\" --method interval");
    CHECK(int_neg.exit_code == 1);
    json ind = parse_output(int_neg);
    CHECK(ind["status"] == "negative");
    CHECK(ind.contains("witness_x_exact"));
    CHECK(ind.contains("witness_value_upper"));
}

TEST_CASE("parse errors exit 64") {
    CHECK(run_cli("certify sine \"1,2/\"").exit_code == 64);
    CHECK(run_cli("certify sine \"1,0.5\"").exit_code == 64);
    CHECK(run_cli("certify wavelet \"1\"").exit_code == 64);
    CHECK(run_cli("certify sine \"1\" --method magic").exit_code == 64);
    CHECK(run_cli("kappa0 3 1/2 --tol 0.001").exit_code == 64);  // decimal tolerances rejected
    CHECK(run_cli("kappa0 2 1/2").exit_code == 64);
    CHECK(run_cli("family nope:3").exit_code == 64);
    CHECK(run_cli("family phi:4").exit_code == 64);
    CHECK(run_cli("criteria \"\"").exit_code == 64);
    CHECK(run_cli("nonsense").exit_code == 64);
}

TEST_CASE("criteria command") {
    json doc = parse_output(run_cli("criteria \"4,3,2,2,1\""));
    CHECK(doc["belov_ok"] == false);
    CHECK(doc["belov_partial_sums"][1] == "-2");
    CHECK(doc["fejer_ok"] == true);

    json sigma = parse_output(run_cli("criteria \"1,1,1,1/2\""));
    CHECK(sigma["nec_at_pi"]["first_sum"] == "0");
    CHECK(sigma["nec_at_pi"]["third_sum"] == "-12");
    CHECK(sigma["nec_at_pi"]["pass"] == true);
    CHECK(sigma["necessary_pass"] == true);

    json one = parse_output(run_cli("criteria \"1\""));
    CHECK(one["belov_ok"] == true);
    CHECK(one["fejer_ok"].is_null());
    CHECK(one["necessary_pass"] == true);
}

TEST_CASE("kappa0 command") {
    json line = parse_output(run_cli("kappa0 3 0"));
    CHECK(line["kappa0_lo"] == "2");
    CHECK(line["kappa0_hi"] == "2");
    CHECK(line["method"] == "closed_form_line");

    json curve = parse_output(run_cli("kappa0 3 1/2"));
    CHECK(curve["kappa0_lo"] == "1");
    CHECK(curve["method"] == "closed_form_curve");

    json bisect = parse_output(run_cli("kappa0 5 2/5 --tol 1/100000"));
    CHECK(bisect["method"] == "bisection");
    double lo = fraction_to_double(bisect["kappa0_lo"].get<std::string>());
    double hi = fraction_to_double(bisect["kappa0_hi"].get<std::string>());
    CHECK(hi - lo <= 1.0 / 100000 + 1e-12);
    CHECK(lo <= 1.0822919);
    CHECK(1.0822917 <= hi);
}

TEST_CASE("boundary command writes csv and svg") {
    std::string csv_path = "cli_boundary_test.csv";
    json doc = parse_output(
        run_cli("boundary 3 -1 2 13 -o " + csv_path));
    CHECK(doc["rows"] == 13);
    std::ifstream in(csv_path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "lambda,kappa0_lo,kappa0_hi,method");
    int rows = 0;
    for (std::string row; std::getline(in, row);) ++rows;
    CHECK(rows == 13);
    std::remove(csv_path.c_str());

    std::string svg_path = "cli_boundary_test.svg";
    json svg = parse_output(run_cli("boundary 4 1/2 3/2 3 --format svg -o " + svg_path));
    CHECK(svg["rows"] == 3);
    std::ifstream svg_in(svg_path);
    REQUIRE(svg_in.good());
    std::string all((std::istreambuf_iterator<char>(svg_in)), std::istreambuf_iterator<char>());
    CHECK(all.find("<svg") != std::string::npos);
    std::remove(svg_path.c_str());

    CHECK(run_cli("boundary 3 0 1 2 -o /nonexistent-dir/x.csv").exit_code == 65);
    CHECK(run_cli("boundary 3 0 1 1 -o " + csv_path).exit_code == 64);
}

TEST_CASE("characterize command") {
    json sine3 = parse_output(run_cli("characterize sine3 5/4 1 1/4"));
    CHECK(sine3["nn"] == true);
    CHECK(sine3["case"] == "i");
    CHECK(sine3["decisive_value"] == "0");

    json cos2 = parse_output(run_cli("characterize cosine2 1 2 1/4"));
    CHECK(cos2["nn"] == false);
    CHECK(cos2["case"] == "i");
    CHECK(cos2["decisive_value"] == "-3/4");
    CHECK(cos2["sine_reduction"] == json::array({"7/4", "2", "1/4"}));

    json plain = parse_output(run_cli("characterize sine3 1 0 0"));
    CHECK(plain["nn"] == true);
}

TEST_CASE("family command") {
    json phi9 = parse_output(run_cli("family phi:9"));
    CHECK(phi9["coeffs"][8] == "5/12");
    CHECK(phi9["certify"]["status"] == "nonnegative");
    CHECK(phi9["criteria"]["nec_at_pi"]["pass"] == true);

    json sigma6 = parse_output(run_cli("family sigma:6"));
    CHECK(sigma6["certify"]["status"] == "nonnegative");

    json theta2 = parse_output(run_cli("family theta-:2"));
    CHECK(theta2["coeffs"] == json::array({"2", "-1"}));
    CHECK(theta2["certify"]["status"] == "nonnegative");
}

TEST_CASE("plain output mode") {
    CliResult r = run_cli("certify sine \"1\" --no-json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("status: \"nonnegative\"") != std::string::npos);
}

TEST_CASE("deterministic output across runs") {
    json a = parse_output(run_cli("kappa0 5 2/5"));
    json b = parse_output(run_cli("kappa0 5 2/5"));
    a.erase("timings_ms");
    b.erase("timings_ms");
    CHECK(a == b);
}
