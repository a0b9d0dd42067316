#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncres/fixtures.hpp"
#include "ncres/oracle.hpp"

namespace ncres {

inline constexpr const char* kReportSchema = "ncres-report/1";
std::string engine_version();

struct RunConfig {
    std::vector<Family> families{Family::Dirac, Family::Signature};
    std::vector<std::string> cases;  // empty: all groups
    std::string format = "json";     // "json" or "markdown"
    bool oracle = true;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string fixtures_path;       // empty: installed default
    std::string display_path;        // empty: installed default
    int jet_order = 1;
    int jobs = 1;
    bool timing = false;             // wall times break byte-identical output, so off by default
};

// "dirac", "signature" or "both".
std::vector<Family> parse_family_selection(const std::string& s);

struct FamilyRun {
    BoundaryTotal total;
    std::vector<OracleCheck> checks;  // per case, seed = config seed
    std::map<std::string, std::string> case_status;
    bool complete = false;            // all groups evaluated
};

struct Report {
    RunConfig config;
    std::vector<FamilyRun> families;
    std::vector<Fixture> fixtures;
    FixtureReport diff;
    std::vector<std::string> invariant_failures;
    std::map<std::string, double> timing;

    bool ok() const { return !diff.engine_bug && invariant_failures.empty(); }
};

Report run(const RunConfig& config);

std::string render_json(const Report& r);
std::string render_markdown(const Report& r);
std::string render_theorem(const FamilyRun& fam, const std::string& display_path = {});

}  // namespace ncres
