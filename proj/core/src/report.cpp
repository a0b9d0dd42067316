#include "ncres/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ncres/errors.hpp"

namespace ncres {

using nlohmann::json;

std::string engine_version() { return "1.0.0"; }

std::vector<Family> parse_family_selection(const std::string& s) {
    if (s == "both") return {Family::Dirac, Family::Signature};
    return {parse_family(s)};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

json load_display(const std::string& path) {
    std::string p = path.empty() ? data_path("display.json") : path;
    std::ifstream in(p);
    if (!in) throw Error("cannot read display file " + p);
    return json::parse(in);
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

Report run(const RunConfig& config) {
    Report rep;
    rep.config = config;
    int jobs = resolve_jobs(config.jobs);
    auto t0 = Clock::now();
    rep.fixtures = load_fixtures(config.fixtures_path.empty() ? data_path("fixtures.json") : config.fixtures_path);
    std::vector<std::string> ids = config.cases.empty() ? case_groups() : config.cases;
    for (auto& id : ids)
        if (std::find(case_groups().begin(), case_groups().end(), id) == case_groups().end())
            throw Error("unknown case " + id);

    Instantiation inst = make_instantiation(config.seed);
    std::vector<BoundaryTotal> totals;
    for (Family fam : config.families) {
        auto tf = Clock::now();
        CatalogOptions co;
        co.jet_order = config.jet_order;
        SymbolCatalog cat(fam, co);
        auto cases = compute_cases(cat, ids, jobs);
        FamilyRun fr;
        for (auto& c : cases) {
            try {
                check_case_invariants(c);
            } catch (const InvariantError& e) {
                rep.invariant_failures.push_back(family_name(fam) + "." + c.case_id + ": " + e.what());
            }
        }
        fr.complete = cases.size() == case_groups().size();
        fr.total = assemble_total(fam, std::move(cases));
        if (config.timing) rep.timing[family_name(fam) + ".compute"] = seconds_since(tf);
        if (config.oracle) {
            auto to = Clock::now();
            for (auto& c : fr.total.cases) {
                fr.checks.push_back(check_case(c, inst, config.tol));
                if (!fr.checks.back().agrees)
                    rep.invariant_failures.push_back(family_name(fam) + "." + c.case_id +
                                                     ": numeric integration disagrees with the exact value");
            }
            if (config.timing) rep.timing[family_name(fam) + ".oracle"] = seconds_since(to);
        }
        totals.push_back(fr.total);
        rep.families.push_back(std::move(fr));
    }

    auto td = Clock::now();
    DiffOptions d;
    d.oracle = config.oracle;
    d.seeds = {config.seed, config.seed + 1, config.seed + 2};
    d.tol = config.tol;
    d.jobs = jobs;
    rep.diff = fixture_diff(totals, rep.fixtures, d);
    for (auto& fr : rep.families)
        for (auto& c : fr.total.cases)
            fr.case_status[c.case_id] = rep.diff.case_status(fr.total.family, c.case_id, rep.fixtures);
    if (config.timing) {
        rep.timing["fixture_diff"] = seconds_since(td);
        rep.timing["total"] = seconds_since(t0);
    }
    return rep;
}

std::string render_theorem(const FamilyRun& fam, const std::string& display_path) {
    json disp = load_display(display_path);
    const json& d = disp.at(family_name(fam.total.family));
    std::ostringstream os;
    os << "### " << d.at("title").get<std::string>() << "\n\n";
    os << d.at("statement").get<std::string>() << "\n\n";
    os << "$$" << d.at("operator").get<std::string>() << " = I + \\int_{\\partial M} B$$\n\n";
    os << "**Interior term I**, " << disp.at("interior_label").get<std::string>() << ":\n\n";
    os << "$$" << d.at("interior").get<std::string>() << "$$\n\n";
    os << "**Boundary term B**, computed";
    if (!fam.complete) os << " (partial: not every case was evaluated)";
    os << ":\n\n";
    os << "```\n" << fam.total.total.str() << "\n```\n\n";
    os << "- h'(0) term: `" << fam.total.h1_coefficient.str() << "*h'(0)` times pi*dimF*Omega4\n";
    os << "- f-jet term: `" << fam.total.fjet_coefficient.str() << "*f^-1*df_n` times pi*dimF*Omega4\n";
    return os.str();
}

namespace {

json case_json(const CaseResult& c, const FamilyRun& fr) {
    json j;
    j["case"] = c.case_id;
    j["value"] = c.value.str();
    json parts = json::object();
    for (auto& [p, v] : c.parts) parts[p] = v.str();
    j["parts"] = parts;
    json tuples = json::array();
    for (auto& t : c.tuples) tuples.push_back(t.str());
    j["tuples"] = tuples;
    auto st = fr.case_status.find(c.case_id);
    j["status"] = st == fr.case_status.end() ? "match" : st->second;
    for (auto& chk : fr.checks)
        if (chk.case_id == c.case_id)
            j["numeric"] = {{"numeric", complex_json(chk.numeric)},
                            {"exact", complex_json(chk.exact)},
                            {"rel_error", chk.rel_error},
                            {"agrees", chk.agrees}};
    return j;
}

json ledger_json(const LedgerEntry& e) {
    json j{{"id", e.id},
           {"classification", e.classification},
           {"expected", e.expected},
           {"engine", e.engine},
           {"difference", e.difference},
           {"citation", e.citation},
           {"quote", e.quote},
           {"note", e.note}};
    if (e.oracle) {
        j["oracle"] = {{"seeds", e.oracle->seeds},
                       {"engine_rel", e.oracle->engine_rel},
                       {"fixture_rel", e.oracle->fixture_rel},
                       {"engine_confirmed", e.oracle->engine_confirmed},
                       {"fixture_rejected", e.oracle->fixture_rejected}};
    }
    return j;
}

json report_json(const Report& r) {
    json j;
    j["schema"] = kReportSchema;
    j["engine_version"] = engine_version();
    json fams = json::array();
    for (auto f : r.config.families) fams.push_back(family_name(f));
    j["config"] = {{"families", fams},
                   {"cases", r.config.cases.empty() ? json(case_groups()) : json(r.config.cases)},
                   {"oracle", r.config.oracle},
                   {"seed", r.config.seed},
                   {"tol", r.config.tol},
                   {"jet_order", r.config.jet_order}};
    json families = json::array();
    for (auto& fr : r.families) {
        json f;
        f["family"] = family_name(fr.total.family);
        f["complete"] = fr.complete;
        f["total"] = fr.total.total.str();
        f["h1_coefficient"] = fr.total.h1_coefficient.str();
        f["fjet_coefficient"] = fr.total.fjet_coefficient.str();
        json cases = json::array();
        for (auto& c : fr.total.cases) cases.push_back(case_json(c, fr));
        f["cases"] = cases;
        f["theorem"] = render_theorem(fr, r.config.display_path);
        families.push_back(f);
    }
    j["families"] = families;
    json fixtures = json::array();
    for (auto& fx : r.fixtures) {
        auto* o = r.diff.outcome(fx.id);
        if (!o) continue;
        fixtures.push_back({{"id", fx.id},
                            {"citation", fx.citation},
                            {"quote", fx.quote},
                            {"typo_suspect", fx.typo_suspect},
                            {"expected", o->expected.str()},
                            {"engine", o->engine.str()},
                            {"status", o->status}});
    }
    j["fixtures"] = fixtures;
    json ledger = json::array();
    for (auto& e : r.diff.ledger) ledger.push_back(ledger_json(e));
    j["ledger"] = ledger;
    json sums = json::array();
    for (auto& s : r.diff.sums)
        sums.push_back({{"family", family_name(s.family)},
                        {"quantity", s.quantity},
                        {"resummed", s.resummed.str()},
                        {"printed", s.printed ? json(s.printed->str()) : json(nullptr)},
                        {"engine", s.engine.str()},
                        {"consistent", s.consistent}});
    j["consistency"] = sums;
    j["invariant_failures"] = r.invariant_failures;
    j["status"] = r.diff.engine_bug ? "engine bug" : (r.invariant_failures.empty() ? "ok" : "invariant failure");
    if (r.config.timing) j["timing"] = r.timing;
    return j;
}

}  // namespace

std::string render_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

std::string render_markdown(const Report& r) {
    std::ostringstream os;
    os << "# ncres report\n\n";
    os << "schema `" << kReportSchema << "`, engine " << engine_version() << ", oracle "
       << (r.config.oracle ? "on, seed " + std::to_string(r.config.seed) : std::string("off")) << "\n\n";
    for (auto& fr : r.families) {
        os << "## " << family_name(fr.total.family) << "\n\n";
        os << "| case | value | status | numeric rel. error |\n|---|---|---|---|\n";
        for (auto& c : fr.total.cases) {
            std::string rel = "-";
            for (auto& chk : fr.checks)
                if (chk.case_id == c.case_id) {
                    std::ostringstream e;
                    e << chk.rel_error;
                    rel = e.str();
                }
            auto st = fr.case_status.find(c.case_id);
            os << "| " << c.case_id << " | `" << c.value.str() << "` | "
               << (st == fr.case_status.end() ? "match" : st->second) << " | " << rel << " |\n";
        }
        os << "\n" << render_theorem(fr, r.config.display_path) << "\n";
    }
    if (!r.diff.sums.empty()) {
        os << "## Consistency sums\n\n| family | quantity | re-summed | printed | engine |\n|---|---|---|---|---|\n";
        for (auto& s : r.diff.sums)
            os << "| " << family_name(s.family) << " | " << s.quantity << " | " << s.resummed.str() << " | "
               << (s.printed ? s.printed->str() : "-") << " | " << s.engine.str() << " |\n";
        os << "\n";
    }
    os << "## Discrepancy ledger\n\n";
    if (r.diff.ledger.empty()) os << "empty\n";
    for (auto& e : r.diff.ledger) {
        os << "- **" << e.id << "** (" << e.classification << ")";
        if (!e.citation.empty()) os << " " << e.citation;
        os << "\n  - expected: `" << e.expected << "`\n  - engine: `" << e.engine << "`\n";
        if (e.oracle) {
            double worst = 0, best_fixture = 1e300;
            for (double v : e.oracle->engine_rel) worst = std::max(worst, v);
            for (double v : e.oracle->fixture_rel) best_fixture = std::min(best_fixture, v);
            os << "  - oracle: engine rel. error <= " << worst << ", fixture rel. error >= " << best_fixture << "\n";
        }
        if (!e.note.empty()) os << "  - note: " << e.note << "\n";
    }
    if (!r.invariant_failures.empty()) {
        os << "\n## Invariant failures\n\n";
        for (auto& f : r.invariant_failures) os << "- " << f << "\n";
    }
    if (r.config.timing) {
        os << "\n## Timing\n\n";
        for (auto& [k, v] : r.timing) os << "- " << k << ": " << v << " s\n";
    }
    return os.str();
}

}  // namespace ncres
