#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncres/gaussian_rational.hpp"
#include "ncres/generators.hpp"

namespace ncres {

// Formal parameters; declaration order is the canonical print order.
enum class Param : std::uint8_t {
    PI,
    H1,     // h'(0)
    H2,     // h''(0)
    F,      // conformal factor (Laurent)
    DF1, DF2, DF3, DF4, DF5, DF6,  // first derivatives of f at the base point
    SNORM,  // |xi'|^2
    OMEGA4, // volume of the unit 4-sphere
    DIMF,   // rank of the twisting bundle
};
inline constexpr std::size_t kParamCount = 13;

inline Param df_param(int axis) { return static_cast<Param>(static_cast<int>(Param::DF1) + axis - 1); }
inline bool is_df(Param p) { return p >= Param::DF1 && p <= Param::DF6; }
std::string param_name(Param p);

// Cyclic normal form of a nonempty word.
struct TraceSymbol {
    FWord word;
    static TraceSymbol of(const FWord& w);  // w must be nonempty
    friend auto operator<=>(const TraceSymbol&, const TraceSymbol&) = default;
    friend bool operator==(const TraceSymbol&, const TraceSymbol&) = default;
    std::string str() const { return "tr(" + word_str(word) + ")"; }
};

struct Monomial {
    std::array<std::int16_t, kParamCount> pw{};
    std::vector<TraceSymbol> traces;  // sorted multiset

    int power(Param p) const { return pw[static_cast<std::size_t>(p)]; }
    bool is_one() const;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    std::string str() const;  // "" for the unit monomial
};

class ScalarExpr {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    ScalarExpr() = default;
    ScalarExpr(GaussianRational c);  // NOLINT(google-explicit-constructor)
    ScalarExpr(long c) : ScalarExpr(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
    static ScalarExpr param(Param p, int power = 1);
    // tr_F of a word: DIMF for the empty word.
    static ScalarExpr trace_of(const FWord& w);
    static ScalarExpr term(Monomial m, GaussianRational c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussianRational constant_value() const;  // throws unless is_constant()
    GaussianRational coefficient(const Monomial& m) const;
    bool mentions(Param p) const;
    bool mentions_trace() const;
    bool mentions_curvature() const;
    std::size_t size() const { return terms_.size(); }

    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    ScalarExpr& operator*=(const ScalarExpr& o);
    ScalarExpr& operator*=(const GaussianRational& c);
    friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
    friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(ScalarExpr a, const GaussianRational& c) { return a *= c; }
    friend ScalarExpr operator*(const GaussianRational& c, ScalarExpr a) { return a *= c; }
    ScalarExpr operator-() const;
    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) { return a.terms_ == b.terms_; }

    // Keep only terms whose monomial satisfies pred.
    template <class Pred>
    ScalarExpr filter(Pred pred) const {
        ScalarExpr out;
        for (auto& [m, c] : terms_)
            if (pred(m)) out.terms_.emplace(m, c);
        return out;
    }

    std::string str() const;
    static ScalarExpr parse(std::string_view text);

private:
    void add_term(const Monomial& m, const GaussianRational& c);
    TermMap terms_;
};

// d/dx_j treating f as the only coordinate-dependent parameter.
// Throws SecondDerivativeError when a DF symbol would be differentiated.
ScalarExpr laurent_f_derivative(const ScalarExpr& e, int axis);

}  // namespace ncres
