#include "ncres/integrator.hpp"

#include "ncres/errors.hpp"

namespace ncres {

namespace {

// Taylor coefficients up to t^order of (c + t)^e, e any integer.
std::vector<GaussianRational> shifted_power_series(const GaussianRational& c, int e, int order) {
    std::vector<GaussianRational> out(static_cast<std::size_t>(order) + 1);
    GaussianRational ce = c.pow(e), cinv = c.inverse();
    GaussianRational cm(1);
    for (int m = 0; m <= order; ++m) {
        if (e >= 0 && m > e) break;
        out[m] = ce * cm * GaussianRational(binomial(mpq_class(e), static_cast<unsigned>(m)));
        cm *= cinv;
    }
    return out;
}

// Taylor coefficients of (pole + t)^n (pole - other + t)^(-other_order) around t = 0.
std::vector<GaussianRational> local_series(const GaussianRational& pole, const GaussianRational& other, int n,
                                           int other_order, int order) {
    auto num = shifted_power_series(pole, n, order);
    auto den = shifted_power_series(pole - other, -other_order, order);
    std::vector<GaussianRational> out(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k)
        for (int m = 0; m <= k; ++m) out[k] += num[m] * den[k - m];
    return out;
}

}  // namespace

ScalarPartialFractions partial_fractions_scalar(int n, int pa, int pb) {
    if (n < 0 || pa < 0 || pb < 0) throw Error("negative exponent in rational term");
    if (n >= pa + pb) throw DecayError("non-decaying rational term");
    ScalarPartialFractions out;
    const GaussianRational i = GaussianRational::i();
    if (pa > 0) {
        auto s = local_series(i, -i, n, pb, pa - 1);
        for (int k = 1; k <= pa; ++k)
            if (!s[pa - k].is_zero()) out.upper[k] = s[pa - k];
    }
    if (pb > 0) {
        auto s = local_series(-i, i, n, pa, pb - 1);
        for (int k = 1; k <= pb; ++k)
            if (!s[pb - k].is_zero()) out.lower[k] = s[pb - k];
    }
    return out;
}

PartialFractions partial_fractions(const RKey& key, const EndoElement& coeff) {
    auto s = partial_fractions_scalar(key.n, key.pa, key.pb);
    PartialFractions out;
    for (auto& [k, c] : s.upper) out.upper[k] = coeff * c;
    for (auto& [k, c] : s.lower) out.lower[k] = coeff * c;
    return out;
}

namespace {

RestrictedSymbol principal_part(const RestrictedSymbol& r, bool upper) {
    RestrictedSymbol out;
    out.set_order(r.order());
    for (auto& [key, e] : r.terms()) {
        auto s = partial_fractions_scalar(key.n, key.pa, key.pb);
        for (auto& [k, c] : upper ? s.upper : s.lower) {
            RKey nk;
            nk.a = key.a;
            (upper ? nk.pa : nk.pb) = static_cast<std::int16_t>(k);
            out.add(nk, e * c);
        }
    }
    return out;
}

}  // namespace

RestrictedSymbol pi_plus(const RestrictedSymbol& r) { return principal_part(r, true); }
RestrictedSymbol pi_minus(const RestrictedSymbol& r) { return principal_part(r, false); }

GaussianRational line_integral_over_pi(int n, int pa, int pb) {
    if (n > pa + pb - 2) throw DecayError("line integral needs two orders of decay");
    auto s = partial_fractions_scalar(n, pa, pb);
    auto it = s.upper.find(1);
    if (it == s.upper.end()) return 0;
    return it->second * GaussianRational(0, 2);
}

std::map<TangentialExponents, EndoElement> contour_integral(const RestrictedSymbol& r) {
    std::map<TangentialExponents, EndoElement> out;
    const ScalarExpr pi = ScalarExpr::param(Param::PI);
    for (auto& [key, e] : r.terms()) {
        GaussianRational v = line_integral_over_pi(key.n, key.pa, key.pb);
        if (v.is_zero()) continue;
        out[key.a] += e * (pi * v);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

mpq_class sphere_moment_over_omega(const TangentialExponents& a) {
    // 3 * prod (a_i - 1)!! / (3 + |a|)!! on the unit sphere in five variables.
    auto dfact = [](long n) {
        mpz_class r = 1;
        for (long k = n; k > 1; k -= 2) r *= k;
        return r;
    };
    long total = 0;
    mpz_class num = 3;
    for (auto v : a) {
        if (v % 2) return 0;
        total += v;
        num *= dfact(v - 1);
    }
    mpq_class out(num, dfact(3 + total));
    out.canonicalize();
    return out;
}

ScalarExpr sphere_moment(const TangentialExponents& a) {
    mpq_class v = sphere_moment_over_omega(a);
    if (sgn(v) == 0) return {};
    mpq_class c = v;
    c.canonicalize();
    return ScalarExpr::param(Param::OMEGA4) * GaussianRational(c);
}

namespace {

GaussianRational key_weight(const RKey& k) {
    mpq_class sph = sphere_moment_over_omega(k.a);
    if (sgn(sph) == 0) return 0;
    return line_integral_over_pi(k.n, k.pa, k.pb) * GaussianRational(sph);
}

ScalarExpr pi_omega() { return ScalarExpr::param(Param::PI) * ScalarExpr::param(Param::OMEGA4); }

}  // namespace

ScalarExpr integrate_boundary(const RestrictedSymbol& integrand) {
    ScalarExpr acc;
    for (auto& [k, e] : integrand.terms()) {
        GaussianRational w = key_weight(k);
        if (w.is_zero()) continue;
        acc += endo_trace(e) * w;
    }
    return acc * pi_omega();
}

ScalarExpr integrate_boundary_pair(const RestrictedSymbol& left, const RestrictedSymbol& right) {
    // Group by combined key first so each trace pairing is weighted once.
    ScalarExpr acc;
    for (auto& [kl, el] : left.terms())
        for (auto& [kr, er] : right.terms()) {
            GaussianRational w = key_weight(kl * kr);
            if (w.is_zero()) continue;
            acc += endo_trace_product(el, er) * w;
        }
    return acc * pi_omega();
}

}  // namespace ncres
