#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lgcy/report.hpp"

using namespace lgcy;

namespace {

const char* kCubicSpec = R"(# cubic
variables = [x, y, z]
degree = 3
f = "x^3+y^3+z^3"
deformations = ["x*y*z"]
points = [[0], [1/10]]
)";

std::string write_temp(const std::string& dir, const std::string& name,
                       const std::string& body) {
    std::filesystem::create_directories(dir);
    std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("spec file parsing") {
    SingularitySpec spec = parse_singularity_spec(kCubicSpec);
    CHECK(spec.variables == std::vector<std::string>{"x", "y", "z"});
    CHECK(spec.degree == 3);
    CHECK(spec.f_text == "x^3+y^3+z^3");
    CHECK_FALSE(spec.weights.has_value());
    REQUIRE(spec.deformations.size() == 1);
    REQUIRE(spec.points.size() == 2);
    CHECK(spec.points[1][0] == Rational(1, 10));

    CHECK_THROWS_AS(parse_singularity_spec("variables = [x]\n"), ParseError);
    CHECK_THROWS_AS(parse_singularity_spec("degree = 3\nf = \"x^3\"\n"), ParseError);
    CHECK_THROWS_AS(
        parse_singularity_spec("variables = [x]\ndegree = 3\nf = \"x^3\"\nbogus = 1\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_singularity_spec("variables = [x]\ndegree = 3\nf = \"x^3\"\nweights = [1/3,1/3]\n"),
        ParseError);
}

TEST_CASE("analyze: cubic pipeline") {
    AnalysisResult res = analyze(parse_singularity_spec(kCubicSpec));
    CHECK(res.status == AnalysisStatus::Ok);
    const Json& r = res.report;
    CHECK(r["schema"] == kReportSchema);
    CHECK(r["milnor"]["mu"] == 8);
    CHECK(r["milnor"]["graded_dims"]["1"] == 3);
    CHECK(r["moduli"]["formula_value"] == "1");
    CHECK(r["moduli"]["match"] == true);
    CHECK(r["hodge"]["hodge_numbers"] == Json::array({1, 1}));
    CHECK(r["monodromy"]["invariant_dimension"] == 2);
    // h = (deg + 3)/3 integral at degrees 0 and 3 only
    CHECK(r["steenbrink"]["dim_w_quotient"] == 2);
    CHECK(r["higgs"]["points"].size() == 2);
    CHECK(r["summary"]["all_checks_pass"] == true);
}

TEST_CASE("analyze: K3 annotation") {
    SingularitySpec spec;
    spec.variables = {"z0", "z1", "z2", "z3"};
    spec.degree = 4;
    spec.f_text = "z0^4+z1^4+z2^4+z3^4";
    AnalysisResult res = analyze(spec);
    CHECK(res.status == AnalysisStatus::Ok);
    CHECK(res.report["moduli"]["k3_exception"] == true);
    CHECK(res.report["moduli"]["formula_value"] == "19");
    CHECK(res.report["moduli"]["complex_deformation_dim"] == 20);
}

TEST_CASE("analyze: error statuses") {
    SingularitySpec bad;
    bad.variables = {"x", "y", "z"};
    bad.degree = 2;
    bad.f_text = "x*y";
    CHECK(analyze(bad).status == AnalysisStatus::Degenerate);

    SingularitySpec syntax;
    syntax.variables = {"x"};
    syntax.degree = 3;
    syntax.f_text = "x^3 + ";
    CHECK(analyze(syntax).status == AnalysisStatus::InvalidInput);

    SingularitySpec nqh;
    nqh.variables = {"x", "y"};
    nqh.degree = 3;
    nqh.f_text = "x^3+y^2";
    CHECK(analyze(nqh).status == AnalysisStatus::InvalidInput);

    // the Fermat jacobian itself is a monomial basis (no reductions needed);
    // a deformed family member forces real Buchberger work
    SingularitySpec tiny;
    tiny.variables = {"x", "y", "z"};
    tiny.degree = 3;
    tiny.f_text = "x^3+y^3+z^3";
    tiny.deformations = {"x*y*z"};
    tiny.points = {{Rational(1, 10)}};
    AnalysisOptions opt;
    opt.budget = 3;
    CHECK(analyze(tiny, opt).status == AnalysisStatus::BudgetExhausted);
}

TEST_CASE("canonical serialization is deterministic") {
    SingularitySpec spec = parse_singularity_spec(kCubicSpec);
    std::string a = canonical_dump(analyze(spec).report);
    std::string b = canonical_dump(analyze(spec).report);
    CHECK(a == b);
    CHECK(a.back() == '\n');
    // parse back: structurally valid JSON
    auto parsed = Json::parse(a);
    CHECK(parsed["schema"] == kReportSchema);
}

TEST_CASE("table rendering mentions every check") {
    AnalysisResult res = analyze(parse_singularity_spec(kCubicSpec));
    std::string table = render_table(res.report);
    CHECK(table.find("[PASS] moduli.count_match") != std::string::npos);
    CHECK(table.find("[PASS] hodge.frobenius_compatibility") != std::string::npos);
}

TEST_CASE("verify_suite: golden round trip, corruption, empty dir") {
    std::string dir = (std::filesystem::temp_directory_path() / "lgcy_suite_test").string();
    std::filesystem::remove_all(dir);
    std::string spec_path = write_temp(dir, "cubic.spec", kCubicSpec);
    // generate golden
    AnalysisResult res = analyze(load_singularity_spec(spec_path));
    write_temp(dir, "cubic.golden.json", canonical_dump(res.report));

    SuiteSummary ok = verify_suite(dir);
    REQUIRE(ok.entries.size() == 1);
    CHECK(ok.entries[0].matched);
    CHECK(ok.status == AnalysisStatus::Ok);

    // corrupt the golden
    {
        std::fstream f(dir + "/cubic.golden.json", std::ios::in | std::ios::out);
        f.seekp(40);
        f.put('!');
    }
    SuiteSummary drift = verify_suite(dir);
    CHECK(drift.status == AnalysisStatus::CheckFailure);
    CHECK_FALSE(drift.entries[0].matched);
    CHECK(drift.entries[0].note.find("differs at byte") != std::string::npos);

    // empty directory
    std::string empty = dir + "/empty";
    std::filesystem::create_directories(empty);
    CHECK(verify_suite(empty).status == AnalysisStatus::InvalidInput);
    std::filesystem::remove_all(dir);
}

TEST_CASE("oscillatory section via options") {
    SingularitySpec spec;
    spec.variables = {"x"};
    spec.degree = 5;
    spec.f_text = "x^5";
    AnalysisOptions opt;
    opt.oscillatory_m = 3;
    AnalysisResult res = analyze(spec, opt);
    CHECK(res.status == AnalysisStatus::Ok);
    CHECK(res.report.contains("oscillatory"));
    CHECK(res.report["oscillatory"]["thimble_integrals"].size() == 6);
    CHECK(res.report["oscillatory"].contains("realness"));
}
