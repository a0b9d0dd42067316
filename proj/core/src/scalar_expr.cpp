#include "ncres/scalar_expr.hpp"

#include <algorithm>
#include <cctype>

#include "ncres/errors.hpp"

namespace ncres {

namespace {

constexpr std::array<std::string_view, kParamCount> kParamNames{
    "pi", "h1", "h2", "f", "df_1", "df_2", "df_3", "df_4", "df_5", "df_n", "snorm", "Omega4", "dimF"};

bool negative_allowed(Param p) { return p == Param::F; }

}  // namespace

std::string param_name(Param p) { return std::string(kParamNames[static_cast<std::size_t>(p)]); }

TraceSymbol TraceSymbol::of(const FWord& w) {
    if (w.empty()) throw InvariantError("empty word is not a trace symbol");
    return TraceSymbol{minimal_rotation(w)};
}

bool Monomial::is_one() const {
    return traces.empty() && std::all_of(pw.begin(), pw.end(), [](auto v) { return v == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t k = 0; k < kParamCount; ++k) out.pw[k] = static_cast<std::int16_t>(a.pw[k] + b.pw[k]);
    out.traces.reserve(a.traces.size() + b.traces.size());
    std::merge(a.traces.begin(), a.traces.end(), b.traces.begin(), b.traces.end(), std::back_inserter(out.traces));
    return out;
}

std::string Monomial::str() const {
    std::vector<std::string> parts;
    auto emit = [&](Param p) {
        int e = power(p);
        if (e == 0) return;
        std::string s = param_name(p);
        if (e != 1) s += "^" + std::to_string(e);
        parts.push_back(std::move(s));
    };
    for (std::size_t k = 0; k <= static_cast<std::size_t>(Param::SNORM); ++k) emit(static_cast<Param>(k));
    for (std::size_t k = 0; k < traces.size();) {
        std::size_t run = 1;
        while (k + run < traces.size() && traces[k + run] == traces[k]) ++run;
        std::string s = traces[k].str();
        if (run > 1) s += "^" + std::to_string(run);
        parts.push_back(std::move(s));
        k += run;
    }
    emit(Param::OMEGA4);
    emit(Param::DIMF);
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += '*';
        out += parts[k];
    }
    return out;
}

ScalarExpr::ScalarExpr(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

ScalarExpr ScalarExpr::param(Param p, int power) {
    if (power < 0 && !negative_allowed(p)) throw InvariantError("negative exponent on " + param_name(p));
    Monomial m;
    m.pw[static_cast<std::size_t>(p)] = static_cast<std::int16_t>(power);
    return term(std::move(m), 1);
}

ScalarExpr ScalarExpr::trace_of(const FWord& w) {
    if (w.empty()) return param(Param::DIMF);
    Monomial m;
    m.traces.push_back(TraceSymbol::of(w));
    return term(std::move(m), 1);
}

ScalarExpr ScalarExpr::term(Monomial m, GaussianRational c) {
    ScalarExpr out;
    if (!c.is_zero()) out.terms_.emplace(std::move(m), std::move(c));
    return out;
}

bool ScalarExpr::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

GaussianRational ScalarExpr::constant_value() const {
    if (!is_constant()) throw InvariantError("expression is not constant: " + str());
    return terms_.empty() ? GaussianRational(0) : terms_.begin()->second;
}

GaussianRational ScalarExpr::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

bool ScalarExpr::mentions(Param p) const {
    return std::any_of(terms_.begin(), terms_.end(), [p](auto& t) { return t.first.power(p) != 0; });
}

bool ScalarExpr::mentions_trace() const {
    return std::any_of(terms_.begin(), terms_.end(), [](auto& t) { return !t.first.traces.empty(); });
}

bool ScalarExpr::mentions_curvature() const {
    for (auto& [m, c] : terms_)
        for (auto& t : m.traces)
            if (word_has_curvature(t.word)) return true;
    return false;
}

void ScalarExpr::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarExpr out;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& o) { return *this = *this * o; }

ScalarExpr& ScalarExpr::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr out = *this;
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

std::string ScalarExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string ms = m.str();
        bool neg = false;
        std::string cs;
        if (c.is_real()) {
            neg = sgn(c.re()) < 0;
            mpq_class a = abs(c.re());
            if (a != 1 || ms.empty()) cs = rational_str(a);
        } else if (sgn(c.re()) == 0) {
            neg = sgn(c.im()) < 0;
            mpq_class a = abs(c.im());
            cs = (a == 1) ? "i" : rational_str(a) + "*i";
        } else {
            cs = "(" + c.str() + ")";
        }
        std::string t = cs;
        if (!cs.empty() && !ms.empty()) t += '*';
        t += ms;
        if (first) out += neg ? "-" + t : t;
        else out += neg ? " - " + t : " + " + t;
        first = false;
    }
    return out;
}

// Recursive-descent parser for the canonical grammar plus a few conveniences
// (juxtaposition, division by constants, parenthesized sums).
namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ScalarExpr parse_all() {
        ScalarExpr e = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_primary_start() {
        skip();
        if (pos_ >= s_.size()) return false;
        char ch = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '(';
    }

    ScalarExpr expr() {
        ScalarExpr out;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        ScalarExpr t = term();
        out += neg ? -t : t;
        while (true) {
            if (eat('+')) out += term();
            else if (eat('-')) out -= term();
            else break;
        }
        return out;
    }

    ScalarExpr term() {
        ScalarExpr out = unary();
        while (true) {
            if (eat('*')) {
                out = out * unary();
            } else if (eat('/')) {
                ScalarExpr d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                out *= d.constant_value().inverse();
            } else if (at_primary_start()) {
                out = out * unary();
            } else {
                break;
            }
        }
        return out;
    }

    ScalarExpr unary() {
        if (eat('-')) return -unary();
        ScalarExpr base = primary();
        if (!eat('^')) return base;
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent expected");
        int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (neg) {
            if (base.is_constant() && !base.is_zero()) return ScalarExpr(base.constant_value().pow(-e));
            if (base == ScalarExpr::param(Param::F)) return ScalarExpr::param(Param::F, -e);
            fail("negative exponent only allowed on f or constants");
        }
        ScalarExpr out(1);
        for (int k = 0; k < e; ++k) out = out * base;
        return out;
    }

    ScalarExpr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            ScalarExpr e = expr();
            if (!eat(')')) fail("')' expected");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ScalarExpr(GaussianRational(mpq_class(std::string(s_.substr(start, pos_ - start)))));
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string_view id = s_.substr(start, pos_ - start);
        if (id.empty()) fail("unexpected character");
        if (id == "i") return ScalarExpr(GaussianRational::i());
        if (id == "tr") {
            if (!eat('(')) fail("'(' expected after tr");
            std::size_t ws = pos_;
            while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
            std::string_view body = s_.substr(ws, pos_ - ws);
            if (!eat(')')) fail("')' expected");
            std::string trimmed;
            for (char c : body)
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
            return ScalarExpr::trace_of(parse_word(trimmed));
        }
        for (std::size_t k = 0; k < kParamCount; ++k)
            if (kParamNames[k] == id) return ScalarExpr::param(static_cast<Param>(k));
        fail("unknown identifier '" + std::string(id) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr ScalarExpr::parse(std::string_view text) { return Parser(text).parse_all(); }

ScalarExpr laurent_f_derivative(const ScalarExpr& e, int axis) {
    if (axis < 1 || axis > 6) throw Error("axis out of range");
    ScalarExpr out;
    for (auto& [m, c] : e.terms()) {
        for (int k = 1; k <= 6; ++k)
            if (m.power(df_param(k)) != 0) throw SecondDerivativeError("second derivative of f requested");
        int fk = m.power(Param::F);
        if (fk == 0) continue;
        Monomial d = m;
        d.pw[static_cast<std::size_t>(Param::F)] = static_cast<std::int16_t>(fk - 1);
        d.pw[static_cast<std::size_t>(df_param(axis))] += 1;
        out += ScalarExpr::term(std::move(d), c * GaussianRational(fk));
    }
    return out;
}

}  // namespace ncres
