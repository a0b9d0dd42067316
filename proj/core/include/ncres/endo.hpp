#pragma once
#include <map>
#include <string>

#include "ncres/clifford.hpp"
#include "ncres/generators.hpp"
#include "ncres/scalar_expr.hpp"
#include "ncres/sparse_matrix.hpp"

namespace ncres {

using ExprMatrix = SparseMatrix<ScalarExpr>;

ExprMatrix to_expr_matrix(const ExactMatrix& m);

// Sum over words w of (matrix_w ⊗ w). dim 0 marks the shape-free zero.
class EndoElement {
public:
    using TermMap = std::map<FWord, ExprMatrix>;

    EndoElement() = default;
    static EndoElement identity(int dim);
    static EndoElement from_matrix(const ExactMatrix& m, const FWord& w = {});
    static EndoElement from_expr_matrix(ExprMatrix m, const FWord& w = {});
    static EndoElement scalar(int dim, const ScalarExpr& s, const FWord& w = {});

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool mentions_curvature() const;

    EndoElement& operator+=(const EndoElement& o);
    EndoElement& operator-=(const EndoElement& o);
    friend EndoElement operator+(EndoElement a, const EndoElement& b) { return a += b; }
    friend EndoElement operator-(EndoElement a, const EndoElement& b) { return a -= b; }
    friend EndoElement operator*(const EndoElement& a, const EndoElement& b);
    friend EndoElement operator*(const EndoElement& a, const ScalarExpr& s);
    friend EndoElement operator*(const EndoElement& a, const GaussianRational& s);
    EndoElement operator-() const;
    friend bool operator==(const EndoElement& a, const EndoElement& b) {
        return a.terms_ == b.terms_ && (a.dim_ == b.dim_ || a.terms_.empty());
    }

    // Applies fn to every scalar entry; fn must be additive.
    template <class F>
    EndoElement map_scalars(F&& fn) const {
        EndoElement out;
        out.dim_ = dim_;
        for (auto& [w, m] : terms_) {
            ExprMatrix mm = m.map(fn);
            if (!mm.is_zero()) out.terms_.emplace(w, std::move(mm));
        }
        return out;
    }

    std::string str() const;

private:
    void add_term(const FWord& w, const ExprMatrix& m, bool subtract);
    int dim_ = 0;
    TermMap terms_;
};

// Full trace: Clifford matrix trace times tr_F of the word.
ScalarExpr endo_trace(const EndoElement& a);

// endo_trace(a * b) without forming the product.
ScalarExpr endo_trace_product(const EndoElement& a, const EndoElement& b);

// c(v) = sum_j v_j c(e_j) ⊗ letter_j, for a per-axis letter kind.
EndoElement clifford_with_letters(const CliffordRep& rep, bool hat, GenKind kind);

}  // namespace ncres
