#include "ncres/endo.hpp"

#include <sstream>

#include "ncres/errors.hpp"

namespace ncres {

ExprMatrix to_expr_matrix(const ExactMatrix& m) {
    return m.map([](const GaussianRational& v) { return ScalarExpr(v); });
}

EndoElement EndoElement::identity(int dim) { return scalar(dim, ScalarExpr(1)); }

EndoElement EndoElement::from_matrix(const ExactMatrix& m, const FWord& w) { return from_expr_matrix(to_expr_matrix(m), w); }

EndoElement EndoElement::from_expr_matrix(ExprMatrix m, const FWord& w) {
    EndoElement e;
    e.dim_ = m.dim();
    if (!m.is_zero()) e.terms_.emplace(w, std::move(m));
    return e;
}

EndoElement EndoElement::scalar(int dim, const ScalarExpr& s, const FWord& w) {
    if (s.is_zero()) {
        EndoElement e;
        e.dim_ = dim;
        return e;
    }
    return from_expr_matrix(ExprMatrix::identity(dim, s), w);
}

bool EndoElement::mentions_curvature() const {
    for (auto& [w, m] : terms_) {
        if (word_has_curvature(w)) return true;
        for (auto& row : m.rows())
            for (auto& [c, v] : row)
                if (v.mentions_curvature()) return true;
    }
    return false;
}

void EndoElement::add_term(const FWord& w, const ExprMatrix& m, bool subtract) {
    if (m.is_zero()) return;
    if (dim_ == 0) dim_ = m.dim();
    if (dim_ != m.dim()) throw ShapeError("endomorphisms over different representations");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, subtract ? -m : m);
        return;
    }
    if (subtract) it->second -= m;
    else it->second += m;
    if (it->second.is_zero()) terms_.erase(it);
}

EndoElement& EndoElement::operator+=(const EndoElement& o) {
    for (auto& [w, m] : o.terms_) add_term(w, m, false);
    if (dim_ == 0) dim_ = o.dim_;
    return *this;
}

EndoElement& EndoElement::operator-=(const EndoElement& o) {
    for (auto& [w, m] : o.terms_) add_term(w, m, true);
    if (dim_ == 0) dim_ = o.dim_;
    return *this;
}

EndoElement operator*(const EndoElement& a, const EndoElement& b) {
    EndoElement out;
    if (a.dim_ && b.dim_ && a.dim_ != b.dim_) throw ShapeError("endomorphisms over different representations");
    out.dim_ = a.dim_ ? a.dim_ : b.dim_;
    for (auto& [wa, ma] : a.terms_)
        for (auto& [wb, mb] : b.terms_) {
            FWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ma * mb, false);
        }
    return out;
}

EndoElement operator*(const EndoElement& a, const ScalarExpr& s) {
    EndoElement out;
    out.dim_ = a.dim_;
    if (s.is_zero()) return out;
    for (auto& [w, m] : a.terms_) {
        ExprMatrix mm = m.scaled(s);
        if (!mm.is_zero()) out.terms_.emplace(w, std::move(mm));
    }
    return out;
}

EndoElement operator*(const EndoElement& a, const GaussianRational& s) {
    EndoElement out;
    out.dim_ = a.dim_;
    if (s.is_zero()) return out;
    for (auto& [w, m] : a.terms_) out.terms_.emplace(w, m.scaled(s));
    return out;
}

EndoElement EndoElement::operator-() const { return *this * GaussianRational(-1); }

std::string EndoElement::str() const {
    std::ostringstream os;
    for (auto& [w, m] : terms_) {
        os << "[" << (w.empty() ? "id" : word_str(w)) << "]\n";
        for (int r = 0; r < m.dim(); ++r)
            for (auto& [c, v] : m.row(r)) os << "  " << r << ' ' << c << ' ' << v.str() << '\n';
    }
    return os.str();
}

ScalarExpr endo_trace(const EndoElement& a) {
    ScalarExpr out;
    for (auto& [w, m] : a.terms()) {
        ScalarExpr t = m.trace();
        if (!t.is_zero()) out += t * ScalarExpr::trace_of(w);
    }
    return out;
}

ScalarExpr endo_trace_product(const EndoElement& a, const EndoElement& b) {
    ScalarExpr out;
    if (a.dim() && b.dim() && a.dim() != b.dim()) throw ShapeError("endomorphisms over different representations");
    for (auto& [wa, ma] : a.terms())
        for (auto& [wb, mb] : b.terms()) {
            ScalarExpr t;
            trace_of_product(ma, mb, [&t](const ScalarExpr& x, const ScalarExpr& y) { t += x * y; });
            if (t.is_zero()) continue;
            FWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out += t * ScalarExpr::trace_of(w);
        }
    return out;
}

EndoElement clifford_with_letters(const CliffordRep& rep, bool hat, GenKind kind) {
    if (hat && !rep.has_chat()) throw Error("representation has no second Clifford action");
    EndoElement out;
    for (int j = 0; j < 6; ++j)
        out += EndoElement::from_matrix(hat ? rep.chat[j] : rep.c[j], FWord{gen(kind, j + 1)});
    return out;
}

}  // namespace ncres
