#pragma once
#include <array>

#include "ncres/clifford.hpp"
#include "ncres/endo.hpp"
#include "ncres/jet.hpp"
#include "ncres/scalar_expr.hpp"

namespace ncres {

using ScalarJet = Jet<ScalarExpr>;

// h(x_n) = 1 + h'(0) x_n + h''(0) x_n^2 / 2, truncated at the given order.
ScalarJet collar_h(int order);

// Values at the base point of the collar metric g = (1/h) g_boundary + dx_n^2.
struct CollarGeometry {
    std::array<std::array<ScalarJet, 6>, 6> metric;          // g_ab as normal-coordinate jets
    std::array<std::array<ScalarExpr, 6>, 6> inverse_metric; // g^ab at the base point
    // christoffel[a][b][c] = Gamma^a_bc at the base point
    std::array<std::array<std::array<ScalarExpr, 6>, 6>, 6> christoffel;
    std::array<ScalarExpr, 6> christoffel_contracted;  // Gamma^a = g^bc Gamma^a_bc
    ScalarExpr mean_curvature;
    // connection[s][t][k] = <nabla_{e_k} e_t, e_s> in the orthonormal frame e_i = sqrt(h) d_i, e_n = d_n
    std::array<std::array<std::array<ScalarExpr, 6>, 6>, 6> connection;
};

CollarGeometry collar_geometry();

// delta^k = -1/4 sum_{s,t} connection[s][t][k] c_s c_t (spin connection in the frame).
std::array<EndoElement, 6> spin_connection_terms(const CollarGeometry& g, const CliffordRep& rep);

// sum_k c_k * (1/4 sum_{s,t} connection[s][t][k] chat_s chat_t); exterior rep only.
EndoElement p_term(const CollarGeometry& g, const CliffordRep& rep);

}  // namespace ncres
