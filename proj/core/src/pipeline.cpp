#include "ncres/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "ncres/errors.hpp"

namespace ncres {

int CaseSpec::alpha_abs() const {
    int s = 0;
    for (auto v : alpha) s += v;
    return s;
}

std::string CaseSpec::str() const {
    std::ostringstream os;
    os << "r=" << r << " l=" << l << " j=" << j << " k=" << k << " alpha=(";
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << alpha[i];
    os << ")";
    return os.str();
}

const std::vector<std::string>& case_groups() {
    static const std::vector<std::string> g{"aI", "aII", "aIII", "b", "c"};
    return g;
}

std::string group_label(Family family, int r, int l, int j, int k, int alpha_abs) {
    if (r == -1 && l == -3) {
        if (alpha_abs == 1) return "aI";
        if (j == 1) return "aII";
        if (k == 1) return "aIII";
    }
    bool first_mixed = (r == -1 && l == -4);
    bool second_mixed = (r == -2 && l == -3);
    if (first_mixed) return family == Family::Dirac ? "b" : "c";
    if (second_mixed) return family == Family::Dirac ? "c" : "b";
    return "";
}

std::vector<CaseSpec> enumerate_cases(Family family) {
    std::vector<CaseSpec> out;
    for (int r : {-1, -2})
        for (int l : {-3, -4}) {
            int budget = r + l + 5;  // k + j + |alpha|
            if (budget < 0) continue;
            for (int j = 0; j <= budget; ++j)
                for (int k = 0; j + k <= budget; ++k) {
                    int rest = budget - j - k;
                    // all alpha with |alpha| = rest
                    std::vector<TangentialExponents> alphas;
                    TangentialExponents a{};
                    auto rec = [&](auto&& self, int axis, int left) -> void {
                        if (axis == 4) {
                            a[4] = static_cast<std::int16_t>(left);
                            alphas.push_back(a);
                            return;
                        }
                        for (int v = left; v >= 0; --v) {
                            a[axis] = static_cast<std::int16_t>(v);
                            self(self, axis + 1, left - v);
                        }
                    };
                    rec(rec, 0, rest);
                    for (auto& al : alphas) {
                        CaseSpec s{family, r, l, j, k, al, ""};
                        if (r + l - k - j - s.alpha_abs() - 1 != -6) continue;
                        s.group = group_label(family, r, l, j, k, s.alpha_abs());
                        out.push_back(s);
                    }
                }
        }
    return out;
}

DerivativeBudget derivative_budget(const SymbolCatalog& cat, const CaseSpec& spec) {
    DerivativeBudget b;
    b.left_normal = spec.j;
    b.right_normal = spec.k;
    int left_jet = spec.r == -1 ? cat.sigma_m1().jet_order() : cat.sigma_m2().jet_order();
    int right_jet = spec.l == -3 ? cat.sigma_m3().jet_order() : cat.sigma_m4().jet_order();
    b.fits = b.left_normal <= left_jet && b.right_normal <= right_jet;
    return b;
}

namespace {

PreSymbol apply(PreSymbol p, VarKind kind, int axis, int times) {
    for (int t = 0; t < times; ++t) p = symbol_derivative(p, {kind, axis});
    return p;
}

mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace

std::vector<CaseIntegrand> build_integrands(const SymbolCatalog& cat, const CaseSpec& spec, const PipelineOptions& opts) {
    DerivativeBudget budget = derivative_budget(cat, spec);
    if (!budget.fits) throw TruncationError("tuple " + spec.str() + " needs more normal derivatives than the jets carry");

    PreSymbol left = spec.r == -1 ? cat.sigma_m1() : cat.sigma_m2();
    left = apply(left, VarKind::XN, 0, spec.j);
    for (int a = 0; a < 5; ++a) left = apply(left, VarKind::Xi, a, spec.alpha[a]);
    left = apply(left, VarKind::XiN, 0, spec.k);
    RestrictedSymbol lr = pi_plus(restrict(left));
    if (opts.pi_plus_sign != 1) lr = lr.scaled(GaussianRational(opts.pi_plus_sign));

    std::vector<std::pair<std::string, PreSymbol>> rights;
    if (spec.l == -3) rights.emplace_back("main", cat.sigma_m3());
    else {
        rights.emplace_back("base", cat.sigma_m4_base());
        rights.emplace_back("df", cat.sigma_m4_df());
        rights.emplace_back("dfinv", cat.sigma_m4_dfinv());
    }

    mpz_class denom = factorial(spec.j + spec.k + 1);
    for (auto v : spec.alpha) denom *= factorial(v);
    GaussianRational pref = GaussianRational(0, -1).pow(spec.alpha_abs() + spec.j + spec.k + 1) / GaussianRational(mpq_class(denom));

    std::vector<CaseIntegrand> out;
    for (auto& [name, sym] : rights) {
        PreSymbol r = sym;
        for (int a = 0; a < 5; ++a) r = apply(r, VarKind::X, a, spec.alpha[a]);
        r = apply(r, VarKind::XiN, 0, spec.j + 1);
        r = apply(r, VarKind::XN, 0, spec.k);
        out.push_back(CaseIntegrand{spec, name, pref, lr, restrict(r)});
    }
    return out;
}

std::string term_kind(const Monomial& m) {
    if (m.power(Param::H1) != 0) return "h1";
    if (!m.traces.empty()) return "trace";
    if (m.power(Param::F) != 0) return "f";
    for (int k = 1; k <= 6; ++k)
        if (m.power(df_param(k)) != 0) return "f";
    return "const";
}

ScalarExpr select_kind(const ScalarExpr& e, const std::string& kind) {
    if (kind == "all") return e;
    return e.filter([&kind](const Monomial& m) { return term_kind(m) == kind; });
}

void check_case_invariants(const CaseResult& r) {
    auto fail = [&](const std::string& what) {
        throw InvariantError(family_name(r.family) + " case " + r.case_id + ": " + what);
    };
    if (r.value.mentions(Param::SNORM)) fail("residual tangential norm");
    if (r.value.mentions(Param::H2)) fail("second derivative of h survived");
    for (int k = 1; k <= 5; ++k)
        if (r.value.mentions(df_param(k))) fail("tangential derivative of f survived");
    if (r.value.mentions_curvature()) fail("reserved curvature letter reached a boundary value");
}

CaseResult compute_case(const SymbolCatalog& cat, const std::string& case_id, const PipelineOptions& opts) {
    CaseResult res;
    res.family = cat.family();
    res.case_id = case_id;
    for (auto& spec : enumerate_cases(cat.family())) {
        if (spec.group != case_id) continue;
        res.tuples.push_back(spec);
        for (auto& in : build_integrands(cat, spec, opts)) {
            ScalarExpr v = integrate_boundary_pair(in.left, in.right) * in.prefactor;
            res.parts[in.part] += v;
            res.value += v;
            res.integrands.push_back(std::move(in));
        }
    }
    if (res.tuples.empty()) throw Error("unknown case id: " + case_id);
    check_case_invariants(res);
    return res;
}

Monomial unit_monomial(std::initializer_list<std::pair<Param, int>> powers) {
    Monomial m;
    for (auto& [p, e] : powers) m.pw[static_cast<std::size_t>(p)] = static_cast<std::int16_t>(e);
    return m;
}

BoundaryTotal assemble_total(Family family, std::vector<CaseResult> cases) {
    auto rank = [](const std::string& id) {
        auto& g = case_groups();
        return std::find(g.begin(), g.end(), id) - g.begin();
    };
    std::sort(cases.begin(), cases.end(), [&](const CaseResult& a, const CaseResult& b) { return rank(a.case_id) < rank(b.case_id); });
    BoundaryTotal t;
    t.family = family;
    for (auto& c : cases) t.total += c.value;
    t.cases = std::move(cases);
    t.h1_coefficient = t.total.coefficient(
        unit_monomial({{Param::PI, 1}, {Param::H1, 1}, {Param::OMEGA4, 1}, {Param::DIMF, 1}}));
    t.fjet_coefficient = t.total.coefficient(
        unit_monomial({{Param::PI, 1}, {Param::F, -1}, {Param::DF6, 1}, {Param::OMEGA4, 1}, {Param::DIMF, 1}}));
    return t;
}

std::vector<CaseResult> compute_cases(const SymbolCatalog& cat, const std::vector<std::string>& ids, int jobs,
                                      const PipelineOptions& opts) {
    std::vector<CaseResult> out(ids.size());
    std::vector<std::exception_ptr> errors(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < ids.size(); i = next++) {
            try {
                out[i] = compute_case(cat, ids[i], opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    int n = std::max(1, std::min<int>(jobs, static_cast<int>(ids.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace ncres
