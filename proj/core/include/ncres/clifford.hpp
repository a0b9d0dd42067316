#pragma once
#include <array>
#include <string>

#include "ncres/gaussian_rational.hpp"
#include "ncres/sparse_matrix.hpp"

namespace ncres {

using ExactMatrix = SparseMatrix<GaussianRational>;

enum class RepKind { Spin, Exterior };

struct CliffordRep {
    RepKind kind{RepKind::Spin};
    int dim_space{6};
    int rep_dim{0};
    std::array<ExactMatrix, 6> c;     // Clifford action, index 0..5 (5 = normal)
    std::array<ExactMatrix, 6> chat;  // second action; exterior rep only
    std::array<int, 6> permutation{0, 1, 2, 3, 4, 5};

    ExactMatrix identity() const { return ExactMatrix::identity(rep_dim, GaussianRational(1)); }
    bool has_chat() const { return kind == RepKind::Exterior; }
    std::string name() const { return kind == RepKind::Spin ? "spin" : "exterior"; }
    // Exact text of every generator matrix, one "row col value" line per entry.
    std::string dump() const;
};

// 8x8 spinor representation from iterated Pauli tensor blocks.
// perm reorders which tensor block plays generator k.
CliffordRep build_spin_rep(const std::array<int, 6>& perm = {0, 1, 2, 3, 4, 5});

// 64x64 representation on forms; basis index is the bitmask of the subset.
CliffordRep build_exterior_rep();

GaussianRational rep_trace(const CliffordRep& rep, const ExactMatrix& m);

// Trace restricted to the degree-m block of the exterior basis.
GaussianRational degree_block_trace(const ExactMatrix& m, int degree);

// Exterior and interior multiplication by e_{j+1} on the 64-dim form space.
ExactMatrix exterior_mult(int j);
ExactMatrix interior_mult(int j);

mpq_class b_coefficient(int m);

}  // namespace ncres
