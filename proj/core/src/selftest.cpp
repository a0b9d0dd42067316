#include "ncres/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ncres/clifford.hpp"
#include "ncres/errors.hpp"
#include "ncres/oracle.hpp"
#include "ncres/pipeline.hpp"

namespace ncres {

namespace {

CheckResult result(std::string name, bool pass, std::string detail = {}) {
    return {std::move(name), pass, std::move(detail)};
}

template <class Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return result(name, false, std::string("exception: ") + e.what());
    }
}

ExactMatrix scaled_identity(int dim, long v) { return ExactMatrix::identity(dim, GaussianRational(v)); }

bool anticommutator_is(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& expect) {
    return a * b + b * a == expect;
}

GaussianRational random_gr(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    return GaussianRational::from_fraction(num(rng), den(rng), num(rng), den(rng));
}

GaussianRational power(const GaussianRational& x, int k) {
    GaussianRational out(1);
    for (int i = 0; i < k; ++i) out *= x;
    return out;
}

// Value of xi_n^n / ((xi_n - i)^pa (xi_n + i)^pb) at a rational point.
GaussianRational key_value(int n, int pa, int pb, const GaussianRational& x) {
    const GaussianRational i = GaussianRational::i();
    return power(x, n) * power(x - i, pa).inverse() * power(x + i, pb).inverse();
}

// Scalar restricted symbols evaluated at xi_n, grouped by tangential monomial.
std::map<TangentialExponents, GaussianRational> evaluate_restricted(const RestrictedSymbol& r, const GaussianRational& x) {
    std::map<TangentialExponents, GaussianRational> out;
    for (auto& [k, e] : r.terms()) {
        if (e.is_zero()) continue;
        GaussianRational c = e.terms().begin()->second.at(0, 0).constant_value();
        out[k.a] += c * key_value(k.n, k.pa, k.pb, x);
    }
    std::erase_if(out, [](auto& kv) { return kv.second.is_zero(); });
    return out;
}

RestrictedSymbol random_restricted(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pole(0, 4), terms(1, 4), axis(0, 4), deg(0, 2);
    RestrictedSymbol r;
    int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        RKey k;
        k.pa = static_cast<std::int16_t>(pole(rng));
        k.pb = static_cast<std::int16_t>(pole(rng));
        if (k.pa + k.pb == 0) k.pa = 1;
        std::uniform_int_distribution<int> num(0, k.pa + k.pb - 1);
        k.n = static_cast<std::int16_t>(num(rng));
        k.a[axis(rng)] = static_cast<std::int16_t>(deg(rng));
        r.add(k, EndoElement::scalar(1, ScalarExpr(random_gr(rng))));
    }
    return r;
}

std::array<GaussianRational, 6> random_point(std::mt19937_64& rng) {
    std::array<GaussianRational, 6> xi;
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    for (auto& v : xi) v = GaussianRational::from_fraction(num(rng), den(rng), 0, 1);
    if (xi[5].is_zero()) xi[5] = GaussianRational(1);
    return xi;
}

bool vanishes_at_points(const PreSymbol& p, std::uint64_t seed, int points) {
    if (p.is_zero()) return true;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < points; ++t)
        if (!p.evaluate(random_point(rng)).is_zero()) return false;
    return true;
}

Monomial h1_unit() { return unit_monomial({{Param::PI, 1}, {Param::H1, 1}, {Param::OMEGA4, 1}, {Param::DIMF, 1}}); }

}  // namespace

CheckResult check_clifford_relations() {
    return guarded("clifford relations", [] {
        int checked = 0;
        for (const CliffordRep& rep : {build_spin_rep(), build_exterior_rep()}) {
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b) {
                    ExactMatrix expect = a == b ? scaled_identity(rep.rep_dim, -2) : ExactMatrix(rep.rep_dim);
                    if (!anticommutator_is(rep.c[a], rep.c[b], expect))
                        return result("clifford relations", false, rep.name() + " c pair failed");
                    ++checked;
                    if (!rep.has_chat()) continue;
                    ExactMatrix plus = a == b ? scaled_identity(rep.rep_dim, 2) : ExactMatrix(rep.rep_dim);
                    if (!anticommutator_is(rep.chat[a], rep.chat[b], plus))
                        return result("clifford relations", false, "chat pair failed");
                    if (!anticommutator_is(rep.c[a], rep.chat[b], ExactMatrix(rep.rep_dim)))
                        return result("clifford relations", false, "mixed pair failed");
                    checked += 2;
                }
        }
        return result("clifford relations", true, std::to_string(checked) + " anticommutators");
    });
}

CheckResult check_spin_traces() {
    return guarded("spin traces", [] {
        CliffordRep rep = build_spin_rep();
        if (rep_trace(rep, rep.identity()) != GaussianRational(8)) return result("spin traces", false, "trace(id) != 8");
        for (int mask = 1; mask < 64; ++mask) {
            ExactMatrix m = rep.identity();
            for (int k = 0; k < 6; ++k)
                if (mask & (1 << k)) m = m * rep.c[k];
            if (!rep_trace(rep, m).is_zero()) return result("spin traces", false, "nonzero trace for mask " + std::to_string(mask));
        }
        CliffordRep ext = build_exterior_rep();
        if (rep_trace(ext, ext.identity()) != GaussianRational(64)) return result("spin traces", false, "trace(id) != 64");
        return result("spin traces", true, "63 distinct-generator products traceless");
    });
}

CheckResult check_b_coefficients() {
    return guarded("b coefficients", [] {
        const std::array<long, 7> expect{1, 2, -1, -4, -1, 2, 1};
        mpq_class sum = 0;
        for (int m = 0; m <= 6; ++m) {
            if (b_coefficient(m) != expect[static_cast<std::size_t>(m)])
                return result("b coefficients", false, "formula mismatch at m=" + std::to_string(m));
            sum += b_coefficient(m);
        }
        if (sum != 0) return result("b coefficients", false, "sum != 0");
        auto commutator = [](int j) {
            ExactMatrix e = exterior_mult(j), i = interior_mult(j);
            return e * i - i * e;
        };
        ExactMatrix normal = commutator(5);
        for (int j = 0; j < 5; ++j) {
            ExactMatrix prod = commutator(j) * normal;
            GaussianRational total;
            for (int m = 0; m <= 6; ++m) {
                GaussianRational t = degree_block_trace(prod, m);
                if (t != GaussianRational(b_coefficient(m)))
                    return result("b coefficients", false, "matrix trace mismatch at axis " + std::to_string(j + 1));
                total += t;
            }
            if (!total.is_zero()) return result("b coefficients", false, "total trace nonzero");
        }
        return result("b coefficients", true, "{1,2,-1,-4,-1,2,1}, sum 0, matrix = formula");
    });
}

CheckResult check_trace_identities(Family family) {
    std::string name = "trace identities (" + family_name(family) + ")";
    return guarded(name, [&] {
        SymbolCatalog cat(family, {});
        const CliffordRep& rep = cat.rep();
        const long d = rep.rep_dim;
        auto letter = [](GenKind k, int axis) { return ScalarExpr::trace_of({gen(k, axis)}); };
        EndoElement cn = EndoElement::from_matrix(rep.c[5]);
        ScalarExpr dimf = ScalarExpr::param(Param::DIMF);
        auto fail = [&](const std::string& what) { return result(name, false, what); };

        if (endo_trace(cn * cn) != dimf * GaussianRational(-d)) return fail("trace[c_n^2]");
        for (int i = 0; i < 5; ++i) {
            EndoElement ci = EndoElement::from_matrix(rep.c[i]);
            if (!endo_trace(ci * cn).is_zero()) return fail("trace[c_i c_n]");
            if (endo_trace(ci * ci) != dimf * GaussianRational(-d)) return fail("trace[c_i^2]");
        }
        // d/dx_n c(xi') times c(xi') at |xi'| = 1
        PreSymbol dc = symbol_derivative(cat.c_xi(), Var{VarKind::XN}) * cat.c_xi().at_base();
        ScalarExpr expect_dc = ScalarExpr::param(Param::H1) * dimf * GaussianRational(-d / 2);
        for (auto& [k, j] : dc.terms()) {
            ScalarExpr t = endo_trace(j.value());
            int squares = 0, other = k.n;
            for (auto v : k.a) {
                if (v == 2) ++squares;
                else other += v;
            }
            bool diagonal = squares == 1 && other == 0;
            if (diagonal ? t != expect_dc : !t.is_zero()) return fail("trace[d c(xi') c(xi')] at " + k.str());
        }
        if (family == Family::Dirac) {
            EndoElement lambda = clifford_with_letters(rep, false, GenKind::SigmaF) - clifford_with_letters(rep, false, GenKind::AStar);
            EndoElement ca = clifford_with_letters(rep, false, GenKind::A);
            EndoElement cas = clifford_with_letters(rep, false, GenKind::AStar);
            for (int j = 0; j < 6; ++j) {
                EndoElement cj = EndoElement::from_matrix(rep.c[j]);
                int ax = j + 1;
                if (endo_trace(cj * lambda) != (letter(GenKind::SigmaF, ax) - letter(GenKind::AStar, ax)) * GaussianRational(-8))
                    return fail("trace[c lambda]");
                if (endo_trace(cj * ca) != letter(GenKind::A, ax) * GaussianRational(-8)) return fail("trace[c c(A)]");
                if (endo_trace(cj * cas) != letter(GenKind::AStar, ax) * GaussianRational(-8)) return fail("trace[c c(A*)]");
            }
        } else {
            for (int i = 0; i < 6; ++i)
                for (int mask = 0; mask < 64; ++mask) {
                    ExactMatrix m = rep.chat[i];
                    for (int k = 0; k < 6; ++k)
                        if (mask & (1 << k)) m = m * rep.c[k];
                    if (!rep_trace(rep, m).is_zero()) return fail("trace with a single chat is nonzero");
                }
            if (!endo_trace(cat.blocks().at("p") * cn).is_zero()) return fail("trace[c_n p]");
        }
        return result(name, true);
    });
}

CheckResult check_collar_geometry() {
    return guarded("collar geometry", [] {
        CollarGeometry g = collar_geometry();
        ScalarExpr h1 = ScalarExpr::param(Param::H1);
        if (g.christoffel_contracted[5] != h1 * GaussianRational::from_fraction(5, 2))
            return result("collar geometry", false, "Gamma^n = " + g.christoffel_contracted[5].str());
        for (int k = 0; k < 5; ++k)
            if (!g.christoffel_contracted[k].is_zero()) return result("collar geometry", false, "Gamma^k != 0");
        if (g.mean_curvature != h1 * GaussianRational::from_fraction(-5, 2))
            return result("collar geometry", false, "K = " + g.mean_curvature.str());
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                if (g.inverse_metric[a][b] != ScalarExpr(a == b ? 1 : 0)) return result("collar geometry", false, "g^ab");
        return result("collar geometry", true, "Gamma^n = " + g.christoffel_contracted[5].str() + ", K = " + g.mean_curvature.str());
    });
}

CheckResult check_partial_fractions(std::uint64_t seed, int count) {
    return guarded("partial fractions", [&] {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pole(0, 6);
        for (int t = 0; t < count; ++t) {
            int pa = pole(rng), pb = pole(rng);
            if (pa + pb == 0) pa = 1;
            std::uniform_int_distribution<int> num(0, pa + pb - 1);
            int n = num(rng);
            ScalarPartialFractions pf = partial_fractions_scalar(n, pa, pb);
            // equality of two rational functions of degree <= pa + pb at enough points
            for (int p = 1; p <= pa + pb + 2; ++p) {
                GaussianRational x = GaussianRational::from_fraction(p, 3, 0, 1);
                GaussianRational sum;
                for (auto& [k, c] : pf.upper) sum += c * power(x - GaussianRational::i(), k).inverse();
                for (auto& [k, c] : pf.lower) sum += c * power(x + GaussianRational::i(), k).inverse();
                if (sum != key_value(n, pa, pb, x))
                    return result("partial fractions", false,
                                  "reassembly failed for n=" + std::to_string(n) + " pa=" + std::to_string(pa) + " pb=" + std::to_string(pb));
            }
        }
        return result("partial fractions", true, std::to_string(count) + " random reassemblies");
    });
}

CheckResult check_projection(std::uint64_t seed, int count) {
    return guarded("projection", [&] {
        std::mt19937_64 rng(seed);
        const std::array<GaussianRational, 3> points{GaussianRational(2), GaussianRational::from_fraction(-1, 3, 0, 1),
                                                     GaussianRational::from_fraction(5, 2, 0, 1)};
        for (int t = 0; t < count; ++t) {
            RestrictedSymbol r = random_restricted(rng);
            RestrictedSymbol p = pi_plus(r);
            if (!(pi_plus(p) == p)) return result("projection", false, "pi+ not idempotent");
            if (!pi_minus(p).is_zero()) return result("projection", false, "pi- of pi+ nonzero");
            RestrictedSymbol sum = p + pi_minus(r);
            for (auto& x : points)
                if (evaluate_restricted(sum, x) != evaluate_restricted(r, x))
                    return result("projection", false, "pi+ + pi- != id");
        }
        return result("projection", true, std::to_string(count) + " random symbols");
    });
}

CheckResult check_contour_quadrature(std::uint64_t seed, int count, double tol) {
    return guarded("contour vs quadrature", [&] {
        double worst = random_contour_check(seed, count);
        std::ostringstream os;
        os << count << " instances, max rel. error " << worst;
        return result("contour vs quadrature", worst <= tol, os.str());
    });
}

CheckResult check_moment_quadrature(double tol) {
    return guarded("moments vs quadrature", [&] {
        double worst = random_moment_check({}, 8);
        TangentialExponents a{2, 0, 0, 0, 0}, b{2, 2, 0, 0, 0};
        bool named = sphere_moment_over_omega(a) == mpq_class(1, 5) && sphere_moment_over_omega(b) == mpq_class(1, 35);
        std::ostringstream os;
        os << "all exponents |a| <= 8, max rel. error " << worst;
        return result("moments vs quadrature", worst <= tol && named, os.str());
    });
}

CheckResult check_leibniz(Family family) {
    std::string name = "leibniz (" + family_name(family) + ")";
    return guarded(name, [&] {
        SymbolCatalog cat(family, {});
        std::vector<std::pair<PreSymbol, PreSymbol>> pairs{{cat.c_xi(), cat.inv_q(2)},
                                                          {cat.sigma_m1(), cat.sigma_m3()},
                                                          {cat.sigma_3(), cat.scalar(cat.f_jet(-1))}};
        std::vector<Var> vars{{VarKind::XiN}, {VarKind::XN}};
        for (int k = 0; k < 5; ++k) {
            vars.push_back({VarKind::Xi, k});
            vars.push_back({VarKind::X, k});
        }
        int checked = 0;
        for (auto& [p, q] : pairs)
            for (auto v : vars) {
                PreSymbol diff = symbol_derivative(p * q, v) - symbol_derivative(p, v) * q - p * symbol_derivative(q, v);
                if (!vanishes_at_points(diff, 11, 4)) return result(name, false, "product rule failed");
                ++checked;
            }
        return result(name, true, std::to_string(checked) + " pair/variable combinations");
    });
}

CheckResult check_composition(Family family, std::uint64_t seed) {
    std::string name = "composition (" + family_name(family) + ")";
    return guarded(name, [&] {
        SymbolCatalog cat(family, {});
        auto [q3, q4] = inverse_symbol_recursion(cat, cat.leading(), cat.sigma_2());
        PreSymbol p3 = cat.leading_symbol(cat.leading());
        if (!vanishes_at_points(p3.at_base() * q3.at_base() - cat.scalar(ScalarJet::constant(ScalarExpr(1), 0)), seed, 5))
            return result(name, false, "p3 q3 != id");
        if (!vanishes_at_points(composition_order_minus1(p3, cat.sigma_2(), q3, q4), seed, 2))
            return result(name, false, "order -1 part nonzero");
        if (!vanishes_at_points(q3.at_base() - cat.sigma_m3().at_base(), seed, 5)) return result(name, false, "q3 != sigma_-3");
        if (!vanishes_at_points(q4 - cat.sigma_m4(), seed, 5)) return result(name, false, "recursion q4 != closed form sigma_-4");
        return result(name, true, "order 0 identity, order -1 cancellation, closed forms agree");
    });
}

CheckResult check_homogeneity(Family family, std::uint64_t seed, double tol) {
    std::string name = "homogeneity (" + family_name(family) + ")";
    return guarded(name, [&] {
        SymbolCatalog cat(family, {});
        double worst = homogeneity_check(cat.sigma_m3(), -3, seed, {2.0, 3.0, 0.5}, 5);
        std::ostringstream os;
        os << "sigma_-3 at t in {2,3,1/2}, max rel. error " << worst;
        return result(name, worst <= tol, os.str());
    });
}

CheckResult check_case_invariants_all(Family family, int jobs) {
    std::string name = "case invariants (" + family_name(family) + ")";
    return guarded(name, [&] {
        SymbolCatalog cat(family, {});
        auto specs = enumerate_cases(family);
        for (auto& s : specs)
            if (s.r + s.l - s.k - s.j - s.alpha_abs() - 1 != -6) return result(name, false, "constraint violated");
        for (auto& s : specs)
            if (!derivative_budget(cat, s).fits) return result(name, false, "derivative budget exceeds jets");
        for (auto& c : compute_cases(cat, case_groups(), jobs)) check_case_invariants(c);
        return result(name, true, std::to_string(specs.size()) + " tuples in " + std::to_string(case_groups().size()) + " groups");
    });
}

CheckResult check_permutation_invariance(int jobs) {
    return guarded("permutation invariance", [&] {
        SymbolCatalog base(Family::Dirac, {});
        CatalogOptions o;
        o.spin_permutation = {3, 1, 5, 0, 2, 4};
        SymbolCatalog perm(Family::Dirac, o);
        auto a = compute_cases(base, case_groups(), jobs);
        auto b = compute_cases(perm, case_groups(), jobs);
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!(a[k].value == b[k].value)) return result("permutation invariance", false, "case " + a[k].case_id + " changed");
        return result("permutation invariance", true, "spin generators permuted (3,1,5,0,2,4)");
    });
}

CheckResult check_trivial_bundle(int jobs) {
    return guarded("trivial bundle", [&] {
        CatalogOptions o;
        o.trivial_bundle = true;
        o.trivial_f = true;
        SymbolCatalog triv(Family::Dirac, o);
        BoundaryTotal t = assemble_total(Family::Dirac, compute_cases(triv, case_groups(), jobs));
        SymbolCatalog full(Family::Dirac, {});
        BoundaryTotal f = assemble_total(Family::Dirac, compute_cases(full, case_groups(), jobs));
        ScalarExpr expect = ScalarExpr::term(h1_unit(), f.h1_coefficient);
        bool pass = t.total == expect;
        return result("trivial bundle", pass, "total " + t.total.str());
    });
}

CheckResult check_determinism(Family family) {
    std::string name = "determinism (" + family_name(family) + ")";
    return guarded(name, [&] {
        SymbolCatalog cat(family, {});
        std::vector<std::string> rev(case_groups().rbegin(), case_groups().rend());
        BoundaryTotal a = assemble_total(family, compute_cases(cat, case_groups(), 1));
        BoundaryTotal b = assemble_total(family, compute_cases(cat, rev, 4));
        if (!(a.total == b.total) || a.cases.size() != b.cases.size()) return result(name, false, "totals differ");
        for (std::size_t k = 0; k < a.cases.size(); ++k)
            if (a.cases[k].case_id != b.cases[k].case_id || !(a.cases[k].value == b.cases[k].value))
                return result(name, false, "case order or value differs");
        return result(name, true, "1 worker forward = 4 workers reversed");
    });
}

std::vector<CheckResult> run_selftest(const SelftestOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(check_clifford_relations());
    out.push_back(check_spin_traces());
    out.push_back(check_b_coefficients());
    out.push_back(check_collar_geometry());
    for (Family f : {Family::Dirac, Family::Signature}) out.push_back(check_trace_identities(f));
    out.push_back(check_partial_fractions(opts.seed, opts.exact_instances));
    out.push_back(check_projection(opts.seed, opts.exact_instances));
    out.push_back(check_contour_quadrature(opts.seed, opts.random_instances, opts.tol));
    out.push_back(check_moment_quadrature(opts.tol));
    for (Family f : {Family::Dirac, Family::Signature}) {
        out.push_back(check_leibniz(f));
        out.push_back(check_composition(f, opts.seed));
        out.push_back(check_homogeneity(f, opts.seed, opts.tol));
    }
    if (opts.pipeline) {
        for (Family f : {Family::Dirac, Family::Signature}) {
            out.push_back(check_case_invariants_all(f, opts.jobs));
            out.push_back(check_determinism(f));
        }
        out.push_back(check_permutation_invariance(opts.jobs));
        out.push_back(check_trivial_bundle(opts.jobs));
    }
    return out;
}

}  // namespace ncres
