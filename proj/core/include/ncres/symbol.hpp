#pragma once
#include <array>
#include <climits>
#include <cstdint>
#include <map>
#include <string>

#include "ncres/endo.hpp"
#include "ncres/jet.hpp"

namespace ncres {

using EndoJet = Jet<EndoElement>;
using ScalarJet = Jet<ScalarExpr>;

bool jet_is_zero(const EndoJet& j);
EndoJet lift(const ScalarJet& s, const EndoElement& m);

// xi'^a * |xi'|^(2s) * xi_n^n / Q^q with Q = |xi'|^2 + xi_n^2 at the base point.
struct SymKey {
    std::array<std::int16_t, 5> a{};
    std::int16_t s = 0;
    std::int16_t n = 0;
    std::int16_t q = 0;

    int degree() const;
    friend SymKey operator*(const SymKey& x, const SymKey& y);
    friend auto operator<=>(const SymKey&, const SymKey&) = default;
    friend bool operator==(const SymKey&, const SymKey&) = default;
    std::string str() const;
};

SymKey xi_key(int axis);  // axis 0..4 tangential, 5 normal

// Variables a symbol can be differentiated in.
enum class VarKind { Xi, XiN, XN, X };
struct Var {
    VarKind kind;
    int axis = 0;  // tangential index 0..4 for Xi and X
};

// Normal-coordinate dependence lives only in the coefficient jets.
class PreSymbol {
public:
    using TermMap = std::map<SymKey, EndoJet>;

    PreSymbol() = default;
    static PreSymbol monomial(const SymKey& k, EndoJet coeff);
    static PreSymbol constant(const EndoElement& e, int jet_order);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int dim() const;
    // Common homogeneity degree; INT_MIN for zero; throws on mixed degrees.
    int order() const;
    int jet_order() const;
    PreSymbol at_base() const;  // truncate every jet to its value

    PreSymbol& operator+=(const PreSymbol& o);
    PreSymbol& operator-=(const PreSymbol& o);
    friend PreSymbol operator+(PreSymbol a, const PreSymbol& b) { return a += b; }
    friend PreSymbol operator-(PreSymbol a, const PreSymbol& b) { return a -= b; }
    friend PreSymbol operator*(const PreSymbol& a, const PreSymbol& b);
    PreSymbol scaled(const GaussianRational& c) const;
    PreSymbol scaled(const ScalarExpr& c) const;

    // Evaluate at a point (s taken as the tangential norm), base point of the collar.
    EndoElement evaluate(const std::array<GaussianRational, 6>& xi) const;

    std::string str() const;

private:
    void add_term(const SymKey& k, const EndoJet& j, bool subtract);
    TermMap terms_;
};

PreSymbol symbol_derivative(const PreSymbol& p, Var v);

// Restricted-key: xi'^a xi_n^n (xi_n - i)^-pa (xi_n + i)^-pb.
struct RKey {
    std::array<std::int16_t, 5> a{};
    std::int16_t n = 0;
    std::int16_t pa = 0;
    std::int16_t pb = 0;

    int tangential_degree() const;
    bool decays() const { return n < pa + pb; }
    friend RKey operator*(const RKey& x, const RKey& y);
    friend auto operator<=>(const RKey&, const RKey&) = default;
    friend bool operator==(const RKey&, const RKey&) = default;
    std::string str() const;
};

class RestrictedSymbol {
public:
    using TermMap = std::map<RKey, EndoElement>;

    RestrictedSymbol() = default;
    static RestrictedSymbol monomial(const RKey& k, const EndoElement& e);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const { return order_; }
    void set_order(int o) { order_ = o; }
    bool decays() const;

    RestrictedSymbol& operator+=(const RestrictedSymbol& o);
    RestrictedSymbol& operator-=(const RestrictedSymbol& o);
    friend RestrictedSymbol operator+(RestrictedSymbol a, const RestrictedSymbol& b) { return a += b; }
    friend RestrictedSymbol operator-(RestrictedSymbol a, const RestrictedSymbol& b) { return a -= b; }
    friend RestrictedSymbol operator*(const RestrictedSymbol& a, const RestrictedSymbol& b);
    RestrictedSymbol scaled(const GaussianRational& c) const;
    friend bool operator==(const RestrictedSymbol& a, const RestrictedSymbol& b) { return a.terms_ == b.terms_; }

    void add(const RKey& k, const EndoElement& e);
    std::string str() const;

private:
    TermMap terms_;
    int order_ = INT_MIN;
};

RestrictedSymbol restrict(const PreSymbol& p);

}  // namespace ncres
