// lgcy: exact invariants of quasi-homogeneous hypersurface singularities and
// machine verification of the Milnor-ring / primitive-cohomology bridge.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lgcy/oscillatory.hpp"
#include "lgcy/report.hpp"

namespace {

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

std::string complex_str(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact LG/CY invariants of hypersurface singularities"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string order_name = "grevlex";
    std::uint64_t budget = lgcy::kDefaultReductionBudget;
    std::uint64_t seed = 0x5EED;
    int nodes = 2000;
    double tol = 1e-6;
    std::string out_path;
    std::string format = "json";
    app.add_option("--order", order_name, "monomial order: grevlex|grlex|lex")
        ->capture_default_str();
    app.add_option("--budget", budget, "S-pair reduction budget")->capture_default_str();
    app.add_option("--seed", seed, "sampling seed for randomized verification")
        ->capture_default_str();
    app.add_option("--nodes", nodes, "quadrature nodes per ray")->capture_default_str();
    app.add_option("--tol", tol, "numeric comparison tolerance")->capture_default_str();
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--format", format, "report format: json|table")->capture_default_str();

    auto* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline on a spec file");
    std::string spec_path;
    int with_oscillatory = 0;
    analyze_cmd->add_option("spec", spec_path, "singularity spec file")->required();
    analyze_cmd->add_option("--oscillatory", with_oscillatory,
                            "append the 1-variable oscillatory section for x^m");

    auto* osc_cmd = app.add_subcommand("oscillatory", "thimble integrals for f = x^m");
    int m = 0, k = -1, j = -1;
    osc_cmd->add_option("--m", m, "degree m >= 2")->required();
    osc_cmd->add_option("--k", k, "form index 1..m-1 (default: all)");
    osc_cmd->add_option("--j", j, "thimble index 0..m-1 (default: all)");

    auto* suite_cmd = app.add_subcommand("verify-suite",
                                         "recompute specs in a directory and compare goldens");
    std::string suite_dir;
    suite_cmd->add_option("dir", suite_dir, "directory of .spec files with .golden.json")
        ->required();

    CLI11_PARSE(app, argc, argv);

    lgcy::AnalysisOptions opt;
    try {
        opt.order.kind = lgcy::order_kind_from_string(order_name);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    opt.budget = budget;
    opt.seed = seed;
    opt.nodes = nodes;
    opt.tol = tol;

    if (analyze_cmd->parsed()) {
        opt.oscillatory_m = with_oscillatory;
        lgcy::SingularitySpec spec;
        try {
            spec = lgcy::load_singularity_spec(spec_path);
        } catch (const std::exception& e) {
            std::cerr << "spec error: " << e.what() << "\n";
            return 2;
        }
        lgcy::AnalysisResult res = lgcy::analyze(spec, opt);
        std::string text = format == "table" ? lgcy::render_table(res.report)
                                             : lgcy::canonical_dump(res.report);
        int w = write_out(text, out_path);
        if (w) return w;
        return static_cast<int>(res.status);
    }

    if (osc_cmd->parsed()) {
        if (m < 2 || (k != -1 && (k < 1 || k > m - 1)) || (j != -1 && (j < 0 || j > m - 1))) {
            std::cerr << "invalid ranges: need m >= 2, 1 <= k <= m-1, 0 <= j <= m-1\n";
            return 2;
        }
        lgcy::Json rep;
        rep["schema"] = lgcy::kReportSchema;
        rep["m"] = m;
        lgcy::Json grid = lgcy::Json::array();
        bool ok = true;
        for (int kk = (k == -1 ? 1 : k); kk <= (k == -1 ? m - 1 : k); ++kk)
            for (int jj = (j == -1 ? 0 : j); jj <= (j == -1 ? m - 1 : j); ++jj) {
                auto t = lgcy::oscillatory_quadrature(m, kk, jj, 12.0, nodes);
                lgcy::Json e;
                e["k"] = kk;
                e["j"] = jj;
                e["closed_form"] = complex_str(t.closed_form);
                e["quadrature"] = complex_str(t.quadrature);
                e["relative_error"] = t.relative_error;
                grid.push_back(e);
                if (t.relative_error >= tol) ok = false;
            }
        rep["thimble_integrals"] = grid;
        if (m == 2) {
            lgcy::Json seg;
            seg["straight_segment"] =
                complex_str(lgcy::straight_segment_integral(2, 1, 0, nodes));
            seg["descent_contour"] = complex_str(lgcy::oscillatory_closed_form(2, 1, 0));
            rep["straight_segment_m2"] = seg;
        }
        if (m >= 3) {
            auto rr = lgcy::realness_probe(m, 1e-8, tol, nodes);
            rep["realness_pass"] = rr.pass();
            if (!rr.pass()) ok = false;
        }
        rep["pass"] = ok;
        int w = write_out(format == "table" ? lgcy::render_table(rep)
                                            : lgcy::canonical_dump(rep),
                          out_path);
        if (w) return w;
        return ok ? 0 : 1;
    }

    if (suite_cmd->parsed()) {
        lgcy::SuiteSummary summary = lgcy::verify_suite(suite_dir, opt);
        if (summary.entries.empty()) {
            std::cerr << "no .spec files in " << suite_dir << "\n";
            return 2;
        }
        std::size_t width = 0;
        for (const auto& e : summary.entries) width = std::max(width, e.spec_file.size());
        for (const auto& e : summary.entries)
            std::cout << e.spec_file << std::string(width + 2 - e.spec_file.size(), ' ')
                      << (e.matched ? "ok    " : "DRIFT ") << e.note << "\n";
        return static_cast<int>(summary.status);
    }
    return 2;
}
