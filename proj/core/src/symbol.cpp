#include "ncres/symbol.hpp"

#include <sstream>

#include "ncres/errors.hpp"

namespace ncres {

bool jet_is_zero(const EndoJet& j) {
    for (auto& v : j.taylor_coeffs())
        if (!v.is_zero()) return false;
    return true;
}

EndoJet lift(const ScalarJet& s, const EndoElement& m) {
    return s.map([&m](const ScalarExpr& v) { return m * v; });
}

int SymKey::degree() const {
    int d = n + 2 * s - 2 * q;
    for (auto v : a) d += v;
    return d;
}

SymKey operator*(const SymKey& x, const SymKey& y) {
    SymKey k;
    for (int i = 0; i < 5; ++i) k.a[i] = static_cast<std::int16_t>(x.a[i] + y.a[i]);
    k.s = static_cast<std::int16_t>(x.s + y.s);
    k.n = static_cast<std::int16_t>(x.n + y.n);
    k.q = static_cast<std::int16_t>(x.q + y.q);
    return k;
}

std::string SymKey::str() const {
    std::ostringstream os;
    os << "xi^(";
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << a[i];
    os << ") s^" << s << " xn^" << n << " /Q^" << q;
    return os.str();
}

SymKey xi_key(int axis) {
    SymKey k;
    if (axis == 5) k.n = 1;
    else k.a[axis] = 1;
    return k;
}

PreSymbol PreSymbol::monomial(const SymKey& k, EndoJet coeff) {
    PreSymbol p;
    if (!jet_is_zero(coeff)) p.terms_.emplace(k, std::move(coeff));
    return p;
}

PreSymbol PreSymbol::constant(const EndoElement& e, int jet_order) {
    return monomial(SymKey{}, EndoJet::constant(e, jet_order));
}

int PreSymbol::dim() const {
    for (auto& [k, j] : terms_)
        for (auto& v : j.taylor_coeffs())
            if (v.dim()) return v.dim();
    return 0;
}

int PreSymbol::order() const {
    int d = INT_MIN;
    for (auto& [k, j] : terms_) {
        if (d == INT_MIN) d = k.degree();
        else if (d != k.degree()) throw InvariantError("symbol is not homogeneous");
    }
    return d;
}

int PreSymbol::jet_order() const {
    int o = INT_MAX;
    for (auto& [k, j] : terms_) o = std::min(o, j.order());
    return o == INT_MAX ? 0 : o;
}

PreSymbol PreSymbol::at_base() const {
    PreSymbol out;
    for (auto& [k, j] : terms_) out.add_term(k, j.truncated(0), false);
    return out;
}

void PreSymbol::add_term(const SymKey& k, const EndoJet& j, bool subtract) {
    if (jet_is_zero(j)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, subtract ? j.scaled(GaussianRational(-1)) : j);
        return;
    }
    if (subtract) it->second -= j;
    else it->second += j;
    if (jet_is_zero(it->second)) terms_.erase(it);
}

PreSymbol& PreSymbol::operator+=(const PreSymbol& o) {
    for (auto& [k, j] : o.terms_) add_term(k, j, false);
    return *this;
}

PreSymbol& PreSymbol::operator-=(const PreSymbol& o) {
    for (auto& [k, j] : o.terms_) add_term(k, j, true);
    return *this;
}

PreSymbol operator*(const PreSymbol& a, const PreSymbol& b) {
    PreSymbol out;
    for (auto& [ka, ja] : a.terms_)
        for (auto& [kb, jb] : b.terms_) out.add_term(ka * kb, ja * jb, false);
    return out;
}

PreSymbol PreSymbol::scaled(const GaussianRational& c) const {
    PreSymbol out;
    for (auto& [k, j] : terms_) out.add_term(k, j.scaled(c), false);
    return out;
}

PreSymbol PreSymbol::scaled(const ScalarExpr& c) const {
    PreSymbol out;
    for (auto& [k, j] : terms_) out.add_term(k, j.map([&c](const EndoElement& e) { return e * c; }), false);
    return out;
}

EndoElement PreSymbol::evaluate(const std::array<GaussianRational, 6>& xi) const {
    GaussianRational s;
    for (int i = 0; i < 5; ++i) s += xi[i] * xi[i];
    GaussianRational q = s + xi[5] * xi[5];
    EndoElement out;
    for (auto& [k, j] : terms_) {
        GaussianRational w(1);
        for (int i = 0; i < 5; ++i) w *= xi[i].pow(k.a[i]);
        w *= s.pow(k.s) * xi[5].pow(k.n) * q.pow(-k.q);
        out += j.value() * w;
    }
    return out;
}

std::string PreSymbol::str() const {
    std::ostringstream os;
    for (auto& [k, j] : terms_) {
        os << "{" << k.str() << "} jet order " << j.order() << '\n';
        for (int m = 0; m <= j.order(); ++m) os << " t" << m << ":\n" << j.taylor(m).str();
    }
    return os.str();
}

namespace {

EndoJet tangential_f_derivative(const EndoJet& j, int axis) {
    std::vector<EndoElement> out;
    for (auto& v : j.taylor_coeffs()) {
        try {
            out.push_back(v.map_scalars([axis](const ScalarExpr& e) { return laurent_f_derivative(e, axis); }));
        } catch (const SecondDerivativeError&) {
            break;
        }
    }
    if (out.empty()) throw TruncationError("tangential derivative would need a second derivative of f");
    return EndoJet::from_taylor(std::move(out));
}

}  // namespace

PreSymbol symbol_derivative(const PreSymbol& p, Var v) {
    PreSymbol out;
    auto push = [&out](SymKey k, const EndoJet& j, long factor) {
        if (factor == 0) return;
        out += PreSymbol::monomial(k, j.scaled(GaussianRational(factor)));
    };
    for (auto& [k, j] : p.terms()) {
        switch (v.kind) {
            case VarKind::Xi: {
                int i = v.axis;
                if (i < 0 || i > 4) throw Error("tangential axis out of range");
                if (k.a[i] > 0) {
                    SymKey d = k;
                    --d.a[i];
                    push(d, j, k.a[i]);
                }
                if (k.s > 0) {
                    SymKey d = k;
                    --d.s;
                    ++d.a[i];
                    push(d, j, 2L * k.s);
                }
                if (k.q > 0) {
                    SymKey d = k;
                    ++d.q;
                    ++d.a[i];
                    push(d, j, -2L * k.q);
                }
                break;
            }
            case VarKind::XiN: {
                if (k.n > 0) {
                    SymKey d = k;
                    --d.n;
                    push(d, j, k.n);
                }
                if (k.q > 0) {
                    SymKey d = k;
                    ++d.q;
                    ++d.n;
                    push(d, j, -2L * k.q);
                }
                break;
            }
            case VarKind::XN:
                out += PreSymbol::monomial(k, j.derivative());
                break;
            case VarKind::X:
                if (v.axis < 0 || v.axis > 4) throw Error("tangential axis out of range");
                out += PreSymbol::monomial(k, tangential_f_derivative(j, v.axis + 1));
                break;
        }
    }
    return out;
}

int RKey::tangential_degree() const {
    int d = 0;
    for (auto v : a) d += v;
    return d;
}

RKey operator*(const RKey& x, const RKey& y) {
    RKey k;
    for (int i = 0; i < 5; ++i) k.a[i] = static_cast<std::int16_t>(x.a[i] + y.a[i]);
    k.n = static_cast<std::int16_t>(x.n + y.n);
    k.pa = static_cast<std::int16_t>(x.pa + y.pa);
    k.pb = static_cast<std::int16_t>(x.pb + y.pb);
    return k;
}

std::string RKey::str() const {
    std::ostringstream os;
    os << "xi^(";
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << a[i];
    os << ") xn^" << n << " /(xn-i)^" << pa << "(xn+i)^" << pb;
    return os.str();
}

RestrictedSymbol RestrictedSymbol::monomial(const RKey& k, const EndoElement& e) {
    RestrictedSymbol r;
    r.add(k, e);
    return r;
}

void RestrictedSymbol::add(const RKey& k, const EndoElement& e) {
    if (e.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, e);
        return;
    }
    it->second += e;
    if (it->second.is_zero()) terms_.erase(it);
}

bool RestrictedSymbol::decays() const {
    for (auto& [k, e] : terms_)
        if (!k.decays()) return false;
    return true;
}

RestrictedSymbol& RestrictedSymbol::operator+=(const RestrictedSymbol& o) {
    for (auto& [k, e] : o.terms_) add(k, e);
    return *this;
}

RestrictedSymbol& RestrictedSymbol::operator-=(const RestrictedSymbol& o) {
    for (auto& [k, e] : o.terms_) add(k, -e);
    return *this;
}

RestrictedSymbol operator*(const RestrictedSymbol& a, const RestrictedSymbol& b) {
    RestrictedSymbol out;
    for (auto& [ka, ea] : a.terms_)
        for (auto& [kb, eb] : b.terms_) out.add(ka * kb, ea * eb);
    if (a.order_ != INT_MIN && b.order_ != INT_MIN) out.order_ = a.order_ + b.order_;
    return out;
}

RestrictedSymbol RestrictedSymbol::scaled(const GaussianRational& c) const {
    RestrictedSymbol out;
    out.order_ = order_;
    for (auto& [k, e] : terms_) out.add(k, e * c);
    return out;
}

std::string RestrictedSymbol::str() const {
    std::ostringstream os;
    for (auto& [k, e] : terms_) os << "{" << k.str() << "}\n" << e.str();
    return os.str();
}

RestrictedSymbol restrict(const PreSymbol& p) {
    RestrictedSymbol out;
    out.set_order(p.order());
    for (auto& [k, j] : p.terms()) {
        const EndoElement& v = j.value();
        for (auto& [w, m] : v.terms())
            for (auto& row : m.rows())
                for (auto& [c, e] : row)
                    if (e.mentions(Param::SNORM)) throw InvariantError("tangential norm left inside a coefficient");
        RKey r;
        r.a = k.a;
        r.n = k.n;
        r.pa = k.q;
        r.pb = k.q;
        out.add(r, v);
    }
    return out;
}

}  // namespace ncres
