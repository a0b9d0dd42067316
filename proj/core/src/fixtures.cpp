#include "ncres/fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include <json.hpp>

#include "ncres/errors.hpp"
#include "ncres/oracle.hpp"

namespace ncres {

std::string data_path(const std::string& file) {
    if (const char* dir = std::getenv("NCRES_DATA_DIR"); dir && *dir) return std::string(dir) + "/" + file;
    // Source tree first so an uninstalled build sees edits; installed copy otherwise.
    for (std::string dir : {NCRES_SOURCE_DATA_DIR, NCRES_INSTALL_DATA_DIR}) {
        std::string path = dir + "/" + file;
        if (std::filesystem::exists(path)) return path;
    }
    return std::string(NCRES_INSTALL_DATA_DIR) + "/" + file;
}

std::vector<Fixture> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read fixtures file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("fixtures: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("fixtures: top level must be an object");
    std::vector<Fixture> out;
    for (auto& [id, v] : j.items()) {
        Fixture fx;
        fx.id = id;
        try {
            fx.family = parse_family(v.at("family").get<std::string>());
            fx.case_id = v.at("case").get<std::string>();
            fx.part = v.value("part", "*");
            fx.kind = v.value("kind", "all");
            fx.expr_text = v.at("expr").get<std::string>();
            fx.citation = v.value("citation", "");
            fx.quote = v.value("quote", "");
            fx.typo_suspect = v.value("typo_suspect", false);
            fx.note = v.value("note", "");
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("fixture " + id + ": " + e.what());
        }
        static const std::set<std::string> kinds{"all", "h1", "trace", "f", "matching"};
        if (!kinds.contains(fx.kind)) throw ParseError("fixture " + id + ": unknown kind " + fx.kind);
        if (fx.case_id != "total" &&
            std::find(case_groups().begin(), case_groups().end(), fx.case_id) == case_groups().end())
            throw ParseError("fixture " + id + ": unknown case " + fx.case_id);
        fx.expr = ScalarExpr::parse(fx.expr_text);
        out.push_back(std::move(fx));
    }
    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.id < b.id; });
    return out;
}

namespace {

const CaseResult* find_case(const BoundaryTotal& t, const std::string& id) {
    for (auto& c : t.cases)
        if (c.case_id == id) return &c;
    return nullptr;
}

// Whole value selected by case and part, before kind filtering.
ScalarExpr selected_value(const BoundaryTotal& t, const Fixture& fx) {
    std::vector<const CaseResult*> cases;
    if (fx.case_id == "total") {
        for (auto& c : t.cases) cases.push_back(&c);
    } else if (auto* c = find_case(t, fx.case_id)) {
        cases.push_back(c);
    } else {
        throw Error("fixture " + fx.id + ": case " + fx.case_id + " was not computed");
    }
    ScalarExpr acc;
    for (auto* c : cases) {
        if (fx.part == "*") {
            acc += c->value;
        } else {
            auto it = c->parts.find(fx.part);
            if (it == c->parts.end()) throw Error("fixture " + fx.id + ": case has no part " + fx.part);
            acc += it->second;
        }
    }
    return acc;
}

ScalarExpr apply_kind(const ScalarExpr& e, const Fixture& fx) {
    if (fx.kind == "matching") {
        std::set<Monomial> names;
        for (auto& [m, c] : fx.expr.terms()) names.insert(m);
        return e.filter([&](const Monomial& m) { return names.contains(m); });
    }
    return select_kind(e, fx.kind);
}

const BoundaryTotal* find_total(const std::vector<BoundaryTotal>& totals, Family f) {
    for (auto& t : totals)
        if (t.family == f) return &t;
    return nullptr;
}

Monomial h1_monomial() {
    return unit_monomial({{Param::PI, 1}, {Param::H1, 1}, {Param::OMEGA4, 1}, {Param::DIMF, 1}});
}

Monomial fjet_monomial() {
    return unit_monomial({{Param::PI, 1}, {Param::F, -1}, {Param::DF6, 1}, {Param::OMEGA4, 1}, {Param::DIMF, 1}});
}

struct NumericKey {
    Family family;
    std::string case_id;
    std::string part;
    std::uint64_t seed;
    auto operator<=>(const NumericKey&) const = default;
};

}  // namespace

ScalarExpr engine_side(const BoundaryTotal& total, const Fixture& fx) { return apply_kind(selected_value(total, fx), fx); }

const FixtureOutcome* FixtureReport::outcome(const std::string& id) const {
    for (auto& o : outcomes)
        if (o.id == id) return &o;
    return nullptr;
}

const LedgerEntry* FixtureReport::entry(const std::string& id) const {
    for (auto& e : ledger)
        if (e.id == id) return &e;
    return nullptr;
}

std::string FixtureReport::case_status(Family family, const std::string& case_id,
                                       const std::vector<Fixture>& fixtures) const {
    std::string status = "match";
    for (auto& fx : fixtures) {
        if (fx.family != family || fx.case_id != case_id) continue;
        auto* o = outcome(fx.id);
        if (!o || o->status == "match") continue;
        if (o->status == "mismatch") return "mismatch";
        status = "fixture-flagged";
    }
    return status;
}

FixtureReport fixture_diff(const std::vector<BoundaryTotal>& totals, const std::vector<Fixture>& fixtures,
                           const DiffOptions& opts) {
    FixtureReport rep;
    std::vector<const Fixture*> differing;
    for (auto& fx : fixtures) {
        const BoundaryTotal* t = find_total(totals, fx.family);
        if (!t) continue;
        if (fx.case_id != "total" && !find_case(*t, fx.case_id)) continue;
        if (fx.case_id == "total" && t->cases.size() != case_groups().size()) continue;
        FixtureOutcome o{fx.id, fx.expr, engine_side(*t, fx), "match"};
        if (!(o.engine == o.expected)) {
            o.status = fx.typo_suspect ? "fixture-flagged" : "mismatch";
            differing.push_back(&fx);
        }
        rep.outcomes.push_back(std::move(o));
    }

    // Numeric integration of every (case, part) a differing fixture touches, once per seed.
    std::map<NumericKey, Complex> numeric;
    std::map<std::uint64_t, Instantiation> insts;
    if (opts.oracle) {
        std::set<NumericKey> keys;
        for (auto* fx : differing) {
            const BoundaryTotal* t = find_total(totals, fx->family);
            for (auto seed : opts.seeds)
                for (auto& c : t->cases)
                    if (fx->case_id == "total" || fx->case_id == c.case_id) keys.insert({fx->family, c.case_id, fx->part, seed});
        }
        for (auto seed : opts.seeds) insts.emplace(seed, make_instantiation(seed));
        std::vector<NumericKey> todo(keys.begin(), keys.end());
        std::vector<Complex> vals(todo.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next++) < todo.size();) {
                auto& k = todo[i];
                CaseResult r = *find_case(*find_total(totals, k.family), k.case_id);
                if (k.part != "*")
                    std::erase_if(r.integrands, [&](const CaseIntegrand& in) { return in.part != k.part; });
                vals[i] = numeric_case_value(r, insts.at(k.seed));
            }
        };
        int jobs = std::max(1, opts.jobs);
        std::vector<std::thread> pool;
        for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        for (std::size_t i = 0; i < todo.size(); ++i) numeric[todo[i]] = vals[i];
    }

    for (auto* fx : differing) {
        const BoundaryTotal* t = find_total(totals, fx->family);
        ScalarExpr whole = selected_value(*t, *fx);
        ScalarExpr eng = apply_kind(whole, *fx);
        LedgerEntry e;
        e.id = fx->id;
        e.expected = fx->expr.str();
        e.engine = eng.str();
        e.difference = (eng - fx->expr).str();
        e.citation = fx->citation;
        e.quote = fx->quote;
        e.note = fx->note;
        if (opts.oracle) {
            OracleVerdict v;
            v.seeds = opts.seeds;
            ScalarExpr substituted = whole - eng + fx->expr;
            v.engine_confirmed = true;
            v.fixture_rejected = true;
            for (auto seed : opts.seeds) {
                Complex num = 0;
                for (auto& c : t->cases)
                    if (fx->case_id == "total" || fx->case_id == c.case_id)
                        num += numeric.at({fx->family, c.case_id, fx->part, seed});
                const Instantiation& inst = insts.at(seed);
                Complex ex = instantiate(whole, inst);
                Complex sub = instantiate(substituted, inst);
                double er = std::abs(num - ex) / std::max(1.0, std::abs(ex));
                double fr = std::abs(num - sub) / std::max(1.0, std::abs(sub));
                v.engine_rel.push_back(er);
                v.fixture_rel.push_back(fr);
                v.engine_confirmed = v.engine_confirmed && er <= opts.tol;
                v.fixture_rejected = v.fixture_rejected && fr > opts.tol;
            }
            if (!v.engine_confirmed) {
                e.classification = "engine bug";
                rep.engine_bug = true;
            } else {
                e.classification = fx->typo_suspect ? "fixture-flagged" : "paper-side discrepancy";
            }
            e.oracle = std::move(v);
        } else {
            e.classification = fx->typo_suspect ? "fixture-flagged" : "unclassified";
        }
        rep.ledger.push_back(std::move(e));
    }

    // Re-summation of the per-case reference values against the reference totals.
    for (auto& t : totals) {
        if (t.cases.size() != case_groups().size()) continue;
        for (std::string q : {"h1", "fjet"}) {
            Monomial m = q == "h1" ? h1_monomial() : fjet_monomial();
            std::string per_case_kind = q == "h1" ? "h1" : "f";
            ConsistencySum s;
            s.family = t.family;
            s.quantity = q;
            s.engine = q == "h1" ? t.h1_coefficient : t.fjet_coefficient;
            bool any = false;
            for (auto& fx : fixtures) {
                if (fx.family != t.family) continue;
                if (fx.case_id == "total") {
                    if (fx.expr.coefficient(m) != GaussianRational()) s.printed = fx.expr.coefficient(m);
                } else if (fx.kind == per_case_kind || fx.kind == "all") {
                    s.resummed += fx.expr.coefficient(m);
                    any = true;
                }
            }
            if (!any || !s.printed) continue;
            s.consistent = *s.printed == s.resummed;
            if (!s.consistent) {
                LedgerEntry e;
                e.id = family_name(t.family) + ".resum." + q;
                e.classification = "paper-side discrepancy";
                e.expected = s.printed->str();
                e.engine = s.engine.str();
                e.difference = (s.resummed - *s.printed).str();
                e.note = "per-case reference coefficients sum to " + s.resummed.str() + ", printed total is " +
                         s.printed->str();
                rep.ledger.push_back(std::move(e));
            }
            rep.sums.push_back(std::move(s));
        }
    }

    // A reference term printed with dimF: report both readings.
    for (auto& fx : fixtures) {
        if (fx.case_id != "total" || fx.kind != "matching" || !fx.expr.mentions(Param::DIMF) ||
            fx.expr.mentions(Param::F))
            continue;
        const BoundaryTotal* t = find_total(totals, fx.family);
        if (!t || t->cases.size() != case_groups().size()) continue;
        ScalarExpr without;
        for (auto& [key, c] : fx.expr.terms()) {
            Monomial m = key;
            if (m.power(Param::DIMF) > 0) --m.pw[static_cast<std::size_t>(Param::DIMF)];
            without += ScalarExpr::term(m, c);
        }
        Fixture alt = fx;
        alt.expr = without;
        LedgerEntry e;
        e.id = fx.id + ".grouping";
        e.classification = "grouping";
        e.expected = fx.expr.str() + " | " + without.str();
        e.engine = engine_side(*t, fx).str() + " | " + engine_side(*t, alt).str();
        e.difference = (engine_side(*t, fx) - fx.expr).str() + " | " + (engine_side(*t, alt) - without).str();
        e.citation = fx.citation;
        e.quote = fx.quote;
        e.note = "term read with and without the dimF factor";
        rep.ledger.push_back(std::move(e));
    }
    return rep;
}

}  // namespace ncres
