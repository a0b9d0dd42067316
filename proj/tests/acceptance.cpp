// One pass/fail line per acceptance criterion. Exit status 0 only when the failing
// set equals the set passed with --expect-fail.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncres/clifford.hpp"
#include "ncres/geometry.hpp"
#include "ncres/report.hpp"
#include "ncres/selftest.hpp"

using namespace ncres;

namespace {

constexpr double kTol = 1e-9;                              // oracle relative tolerance
constexpr std::uint64_t kSeed = 0;                         // oracle seeds kSeed, kSeed+1, kSeed+2
constexpr int kRandomInstances = 100;                      // residue and moment quadrature checks
constexpr std::array<int, 6> kPermutation{3, 1, 5, 0, 2, 4};

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Context {
    Report report;
    std::string json;
    std::string json_rerun;
    std::string json_other_jobs;
};

std::string fmt_rel(const std::vector<double>& v) {
    double worst = 0;
    for (double x : v) worst = std::max(worst, x);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", worst);
    return buf;
}

// A fixture is reproduced by an exact match, or by a ledger entry whose oracle
// confirms the engine value and rejects the reference value.
bool fixture_ok(const Report& r, const std::string& id, std::string& why) {
    const auto* o = r.diff.outcome(id);
    if (!o) {
        why += id + ": missing; ";
        return false;
    }
    if (o->status == "match") {
        why += id + ": exact; ";
        return true;
    }
    const auto* e = r.diff.entry(id);
    bool ok = e && e->oracle && e->oracle->engine_confirmed && e->oracle->fixture_rejected &&
              (e->classification == "paper-side discrepancy" || e->classification == "fixture-flagged");
    why += id + (ok ? ": ledger (" + e->classification + ", oracle " + fmt_rel(e->oracle->engine_rel) + "); "
                    : ": unresolved; ");
    return ok;
}

Verdict fixtures_ok(const Report& r, const std::vector<std::string>& ids) {
    Verdict v{true, {}};
    for (auto& id : ids) v.pass = fixture_ok(r, id, v.detail) && v.pass;
    return v;
}

const FamilyRun& fam(const Report& r, Family f) {
    for (auto& fr : r.families)
        if (fr.total.family == f) return fr;
    throw Error("family missing from report");
}

const CaseResult& case_of(const Report& r, Family f, const std::string& id) {
    for (auto& c : fam(r, f).total.cases)
        if (c.case_id == id) return c;
    throw Error("case missing from report");
}

const ConsistencySum* sum_of(const Report& r, Family f, const std::string& q) {
    for (auto& s : r.diff.sums)
        if (s.family == f && s.quantity == q) return &s;
    return nullptr;
}

Verdict from_checks(const std::vector<CheckResult>& checks) {
    Verdict v{true, {}};
    for (auto& c : checks) {
        v.pass = v.pass && c.pass;
        v.detail += c.name + (c.pass ? " ok; " : " FAILED (" + c.detail + "); ");
    }
    return v;
}

Verdict c1(const Context& ctx) {
    auto& r = ctx.report;
    bool zero = case_of(r, Family::Dirac, "aI").value.is_zero() && case_of(r, Family::Signature, "aI").value.is_zero();
    auto v = fixtures_ok(r, {"dirac.aI", "signature.aI"});
    v.pass = v.pass && zero;
    return v;
}

Verdict c2(const Context& ctx) { return fixtures_ok(ctx.report, {"dirac.aII.h1", "dirac.aII.f"}); }
Verdict c3(const Context& ctx) { return fixtures_ok(ctx.report, {"dirac.aIII.h1", "dirac.aIII.f"}); }
Verdict c4(const Context& ctx) {
    return fixtures_ok(ctx.report, {"dirac.b.h1", "dirac.b.trace", "dirac.b.df", "dirac.b.dfinv"});
}

Verdict c5(const Context& ctx) {
    auto v = fixtures_ok(ctx.report, {"dirac.c.h1", "dirac.c.trace", "dirac.c.summary"});
    const auto* e = ctx.report.diff.entry("dirac.c.summary");
    bool logged = e && e->classification == "fixture-flagged";
    v.detail += logged ? "summary inconsistency logged" : "summary inconsistency NOT logged";
    v.pass = v.pass && logged;
    return v;
}

Verdict c6(const Context& ctx) {
    const auto& t = fam(ctx.report, Family::Dirac).total;
    bool h1 = t.h1_coefficient == GaussianRational(-4);
    bool fj = t.fjet_coefficient == GaussianRational::from_fraction(11, 1, 19, 16);
    std::string detail = "h1 engine " + t.h1_coefficient.str() + " vs -4; fjet engine " + t.fjet_coefficient.str() +
                         " vs 11+19/16*i";
    for (auto id : {"dirac.total.h1", "dirac.total.fjet"})
        if (auto* e = ctx.report.diff.entry(id); e && e->oracle)
            detail += std::string("; ") + id + " oracle engine " + fmt_rel(e->oracle->engine_rel) + " reference " +
                      fmt_rel(e->oracle->fixture_rel);
    return {h1 && fj, detail};
}

Verdict c7(const Context& ctx) {
    return fixtures_ok(ctx.report, {"signature.aII.h1", "signature.aII.f", "signature.aIII.h1", "signature.aIII.f",
                                    "signature.b.h1", "signature.b.trace", "signature.c.h1", "signature.c.trace",
                                    "signature.c.f"});
}

Verdict c8(const Context& ctx) {
    const auto& r = ctx.report;
    const auto& t = fam(r, Family::Signature).total;
    bool h1 = t.h1_coefficient == GaussianRational(-37);
    std::string detail = "h1 engine " + t.h1_coefficient.str() + " vs -37";
    if (auto* e = r.diff.entry("signature.total.h1"); e && e->oracle)
        detail += " (oracle engine " + fmt_rel(e->oracle->engine_rel) + " reference " + fmt_rel(e->oracle->fixture_rel) +
                  ")";
    const auto* s = sum_of(r, Family::Signature, "fjet");
    const auto* e = r.diff.entry("signature.resum.fjet");
    bool resum = s && e && e->classification == "paper-side discrepancy" &&
                 s->resummed == GaussianRational::from_fraction(88, 1, 19, 2) && s->printed &&
                 *s->printed == GaussianRational::from_fraction(88, 1, 19, 22);
    detail += resum ? "; fjet re-summation 88+19/2*i vs printed 88+19/22*i logged paper-side"
                    : "; fjet re-summation entry missing";
    return {h1 && resum, detail};
}

Verdict c9(const Context&) {
    Verdict v = from_checks({check_b_coefficients()});
    mpq_class sum = 0;
    for (int m = 0; m <= 6; ++m) sum += b_coefficient(m);
    v.pass = v.pass && sum == 0;
    v.detail += "sum " + sum.get_str();
    return v;
}

Verdict c10(const Context&) {
    auto v = from_checks({check_collar_geometry()});
    auto g = collar_geometry();
    v.detail += "Gamma^n " + g.christoffel_contracted[5].str() + ", K " + g.mean_curvature.str();
    return v;
}

Verdict c11(const Context&) {
    return from_checks({check_clifford_relations(), check_spin_traces(), check_trace_identities(Family::Dirac),
                        check_trace_identities(Family::Signature), check_partial_fractions(kSeed, 1000),
                        check_projection(kSeed, 1000), check_leibniz(Family::Dirac), check_leibniz(Family::Signature),
                        check_composition(Family::Dirac, kSeed), check_composition(Family::Signature, kSeed),
                        check_homogeneity(Family::Dirac, kSeed, kTol), check_homogeneity(Family::Signature, kSeed, kTol),
                        check_contour_quadrature(kSeed, kRandomInstances, kTol), check_moment_quadrature(kTol)});
}

Verdict c12(const Context& ctx) {
    Verdict v = from_checks({check_permutation_invariance(2), check_determinism(Family::Dirac),
                             check_determinism(Family::Signature)});
    bool rerun = ctx.json == ctx.json_rerun;
    bool jobs = ctx.json == ctx.json_other_jobs;
    v.detail += std::string("rerun ") + (rerun ? "identical" : "DIFFERS") + "; other worker count " +
                (jobs ? "identical" : "DIFFERS");
    v.pass = v.pass && rerun && jobs;
    return v;
}

std::set<int> parse_set(const std::string& s) {
    std::set<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.insert(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::string expect_fail;
    bool verbose = false;
    app.add_option("--expect-fail", expect_fail, "comma-separated criteria known to fail");
    app.add_flag("-v,--verbose", verbose, "print details for every criterion");
    CLI11_PARSE(app, argc, argv);
    const auto expected = parse_set(expect_fail);

    Context ctx;
    try {
        RunConfig cfg;
        cfg.oracle = true;
        cfg.seed = kSeed;
        cfg.tol = kTol;
        cfg.jobs = 2;
        ctx.report = run(cfg);
        ctx.json = render_json(ctx.report);
        ctx.json_rerun = render_json(run(cfg));
        cfg.jobs = 1;
        ctx.json_other_jobs = render_json(run(cfg));
    } catch (const std::exception& e) {
        std::printf("acceptance: engine run failed: %s\n", e.what());
        return 2;
    }

    const std::vector<std::pair<std::string, std::function<Verdict(const Context&)>>> criteria{
        {"case a(I) vanishes for both families", c1},
        {"Dirac case a(II)", c2},
        {"Dirac case a(III)", c3},
        {"Dirac case b components", c4},
        {"Dirac case c with summary inconsistency logged", c5},
        {"Dirac total coefficients exact", c6},
        {"signature cases a(II), a(III), b, c", c7},
        {"signature total and f-jet re-summation", c8},
        {"exterior degree coefficients", c9},
        {"collar geometry from metric jet", c10},
        {"property suites", c11},
        {"determinism and permutation invariance", c12},
    };

    std::set<int> failed;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        int id = static_cast<int>(k + 1);
        Verdict v;
        try {
            v = criteria[k].second(ctx);
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        if (!v.pass) failed.insert(id);
        const char* tag = v.pass ? "PASS" : (expected.count(id) ? "FAIL (documented in ledger)" : "FAIL");
        std::printf("[%2d] %-48s %s\n", id, criteria[k].first.c_str(), tag);
        if (verbose || !v.pass) std::printf("     %s\n", v.detail.c_str());
    }
    std::printf("tolerance %.0e relative, seeds %llu..%llu, %d random instances per quadrature check\n", kTol,
                static_cast<unsigned long long>(kSeed), static_cast<unsigned long long>(kSeed + 2), kRandomInstances);
    if (failed != expected) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
