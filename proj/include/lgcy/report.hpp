#ifndef LGCY_REPORT_HPP
#define LGCY_REPORT_HPP

#include <json.hpp>

#include "lgcy/groebner.hpp"
#include "lgcy/spec_file.hpp"

namespace lgcy {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "lgcy-report/1";

// CLI exit codes.
enum class AnalysisStatus : int {
    Ok = 0,
    CheckFailure = 1,
    InvalidInput = 2,
    Degenerate = 3,
    BudgetExhausted = 4,
};

struct AnalysisOptions {
    MonomialOrder order{};
    std::uint64_t budget = kDefaultReductionBudget;
    std::uint64_t seed = 0x5EED;
    std::uint64_t frobenius_triples = 500;
    int oscillatory_m = 0;  // 0: no oscillatory section
    int nodes = 2000;
    double tol = 1e-6;
    Rational potentiality_step = Rational(1, 100);
};

struct AnalysisResult {
    Json report;
    AnalysisStatus status = AnalysisStatus::Ok;
};

// Full pipeline over one spec. Never throws; failures are encoded in the
// status and the report's error/summary fields.
AnalysisResult analyze(const SingularitySpec& spec, const AnalysisOptions& opt = {});

// Canonical serialization: fixed key order, rationals as "p/q" strings,
// 2-space indent, trailing newline. Identical runs produce identical bytes.
std::string canonical_dump(const Json& report);

std::string render_table(const Json& report);

struct SuiteEntry {
    std::string spec_file;
    bool matched = false;
    std::string note;          // "match" or first-difference location
};

struct SuiteSummary {
    std::vector<SuiteEntry> entries;
    AnalysisStatus status = AnalysisStatus::Ok;
};

// Recomputes every *.spec in the directory and byte-compares against the
// sibling *.golden.json.
SuiteSummary verify_suite(const std::string& directory, const AnalysisOptions& opt = {});

}  // namespace lgcy

#endif
