#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncres/pipeline.hpp"

namespace ncres {

// One reference value. case_id is a group label or "total"; part is "*" or a symbol part;
// kind is "all", "h1", "trace", "f" or "matching" (compare only the monomials the fixture names).
struct Fixture {
    std::string id;
    Family family{Family::Dirac};
    std::string case_id;
    std::string part = "*";
    std::string kind = "all";
    std::string expr_text;
    ScalarExpr expr;
    std::string citation;
    std::string quote;
    bool typo_suspect = false;
    std::string note;
};

// Data directory: $NCRES_DATA_DIR if set, else the source tree, else the install prefix.
std::string data_path(const std::string& file);

std::vector<Fixture> load_fixtures(const std::string& path);  // sorted by id

// The slice of the engine result a fixture speaks about.
ScalarExpr engine_side(const BoundaryTotal& total, const Fixture& fx);

struct OracleVerdict {
    std::vector<std::uint64_t> seeds;
    std::vector<double> engine_rel;  // numeric vs engine value
    std::vector<double> fixture_rel; // numeric vs engine value with the fixture slice substituted
    bool engine_confirmed = false;
    bool fixture_rejected = false;
};

struct FixtureOutcome {
    std::string id;
    ScalarExpr expected;
    ScalarExpr engine;
    std::string status;  // "match", "mismatch", "fixture-flagged"
};

struct LedgerEntry {
    std::string id;
    std::string classification;  // "paper-side discrepancy", "fixture-flagged", "engine bug", "grouping"
    std::string expected;
    std::string engine;
    std::string difference;
    std::string citation;
    std::string quote;
    std::string note;
    std::optional<OracleVerdict> oracle;
};

struct ConsistencySum {
    Family family{Family::Dirac};
    std::string quantity;   // "h1" or "fjet"
    GaussianRational resummed;  // sum of the per-case reference coefficients
    std::optional<GaussianRational> printed;  // the reference total, if present
    GaussianRational engine;
    bool consistent = false;
};

struct DiffOptions {
    bool oracle = true;
    std::vector<std::uint64_t> seeds{0, 1, 2};
    double tol = 1e-9;
    int jobs = 1;
};

struct FixtureReport {
    std::vector<FixtureOutcome> outcomes;
    std::vector<LedgerEntry> ledger;
    std::vector<ConsistencySum> sums;
    bool engine_bug = false;

    const FixtureOutcome* outcome(const std::string& id) const;
    const LedgerEntry* entry(const std::string& id) const;
    // "match" when every fixture of the case matches, "fixture-flagged" when only flagged ones differ.
    std::string case_status(Family family, const std::string& case_id, const std::vector<Fixture>& fixtures) const;
};

FixtureReport fixture_diff(const std::vector<BoundaryTotal>& totals, const std::vector<Fixture>& fixtures,
                           const DiffOptions& opts = {});

}  // namespace ncres
