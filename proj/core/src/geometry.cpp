#include "ncres/geometry.hpp"

#include "ncres/errors.hpp"

namespace ncres {

ScalarJet collar_h(int order) {
    std::vector<ScalarExpr> t{ScalarExpr(1), ScalarExpr::param(Param::H1),
                              ScalarExpr::param(Param::H2) * GaussianRational::from_fraction(1, 2)};
    t.resize(static_cast<std::size_t>(order) + 1);
    return ScalarJet::from_taylor(std::move(t));
}

namespace {

constexpr int kNormal = 5;

// Partial derivative at the base point of a jet depending on x_n only.
ScalarExpr d_at0(const ScalarJet& j, int axis) { return axis == kNormal ? j.derivative().value() : ScalarExpr(); }

}  // namespace

CollarGeometry collar_geometry() {
    constexpr int order = 2;
    CollarGeometry g;
    ScalarJet h = collar_h(order);
    ScalarJet inv_h = unit_jet_power(h, mpq_class(-1), ScalarExpr(1));
    ScalarJet sqrt_h = unit_jet_power(h, mpq_class(1, 2), ScalarExpr(1));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            g.metric[a][b] = ScalarJet::constant(ScalarExpr(), order);
    for (int a = 0; a < kNormal; ++a) g.metric[a][a] = inv_h;
    g.metric[kNormal][kNormal] = ScalarJet::constant(ScalarExpr(1), order);

    // The metric is diagonal; invert its base-point value entrywise.
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            if (a != b && !g.metric[a][b].value().is_zero()) throw InvariantError("collar metric must be diagonal");
            g.inverse_metric[a][b] = a == b ? ScalarExpr(g.metric[a][a].value().constant_value().inverse()) : ScalarExpr();
        }
    }

    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c) {
                ScalarExpr s;
                for (int l = 0; l < 6; ++l) {
                    if (g.inverse_metric[a][l].is_zero()) continue;
                    ScalarExpr inner = d_at0(g.metric[c][l], b) + d_at0(g.metric[b][l], c) - d_at0(g.metric[b][c], l);
                    s += g.inverse_metric[a][l] * inner;
                }
                g.christoffel[a][b][c] = s * GaussianRational::from_fraction(1, 2);
            }

    for (int a = 0; a < 6; ++a) {
        ScalarExpr s;
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                if (!g.inverse_metric[b][c].is_zero()) s += g.inverse_metric[b][c] * g.christoffel[a][b][c];
        g.christoffel_contracted[a] = s;
    }

    ScalarExpr k;
    for (int i = 0; i < kNormal; ++i)
        for (int j = 0; j < kNormal; ++j)
            if (!g.inverse_metric[i][j].is_zero()) k -= g.inverse_metric[i][j] * g.christoffel[kNormal][i][j];
    g.mean_curvature = k;

    // Frame components E[t][a] as jets.
    std::array<std::array<ScalarJet, 6>, 6> frame;
    for (int t = 0; t < 6; ++t)
        for (int a = 0; a < 6; ++a) frame[t][a] = ScalarJet::constant(ScalarExpr(), order);
    for (int t = 0; t < kNormal; ++t) frame[t][t] = sqrt_h;
    frame[kNormal][kNormal] = ScalarJet::constant(ScalarExpr(1), order);

    for (int s = 0; s < 6; ++s)
        for (int t = 0; t < 6; ++t)
            for (int kk = 0; kk < 6; ++kk) {
                // nabla_{e_k} e_t = E_k^b (d_b E_t^a + Gamma^a_bc E_t^c) d_a, paired with e_s.
                ScalarExpr val;
                for (int a = 0; a < 6; ++a) {
                    ScalarExpr comp;
                    for (int b = 0; b < 6; ++b) {
                        const ScalarExpr& ekb = frame[kk][b].value();
                        if (ekb.is_zero()) continue;
                        ScalarExpr inner = d_at0(frame[t][a], b);
                        for (int c = 0; c < 6; ++c) inner += g.christoffel[a][b][c] * frame[t][c].value();
                        comp += ekb * inner;
                    }
                    if (comp.is_zero()) continue;
                    for (int d = 0; d < 6; ++d) val += g.metric[a][d].value() * frame[s][d].value() * comp;
                }
                g.connection[s][t][kk] = val;
            }
    return g;
}

std::array<EndoElement, 6> spin_connection_terms(const CollarGeometry& g, const CliffordRep& rep) {
    std::array<EndoElement, 6> out;
    for (int k = 0; k < 6; ++k) {
        EndoElement acc;
        for (int s = 0; s < 6; ++s)
            for (int t = 0; t < 6; ++t) {
                const ScalarExpr& w = g.connection[s][t][k];
                if (w.is_zero()) continue;
                acc += EndoElement::from_matrix(rep.c[s] * rep.c[t]) * (w * GaussianRational::from_fraction(-1, 4));
            }
        out[k] = acc;
    }
    return out;
}

EndoElement p_term(const CollarGeometry& g, const CliffordRep& rep) {
    if (!rep.has_chat()) throw Error("p-term needs the form representation");
    EndoElement out;
    for (int k = 0; k < 6; ++k) {
        EndoElement inner;
        for (int s = 0; s < 6; ++s)
            for (int t = 0; t < 6; ++t) {
                const ScalarExpr& w = g.connection[s][t][k];
                if (w.is_zero()) continue;
                inner += EndoElement::from_matrix(rep.chat[s] * rep.chat[t]) * (w * GaussianRational::from_fraction(1, 4));
            }
        out += EndoElement::from_matrix(rep.c[k]) * inner;
    }
    return out;
}

}  // namespace ncres
