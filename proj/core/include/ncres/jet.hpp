#pragma once
#include <algorithm>
#include <vector>

#include "ncres/errors.hpp"
#include "ncres/gaussian_rational.hpp"

namespace ncres {

// Truncated Taylor expansion in the normal coordinate at 0.
// Stored as Taylor coefficients t_k = (d/dx)^k v / k!, k = 0..order.
// T needs +, -, T*T and T*GaussianRational; T{} must act as zero.
template <class T>
class Jet {
public:
    Jet() : t_(1) {}
    explicit Jet(T v0) : t_{std::move(v0)} {}
    static Jet from_taylor(std::vector<T> coeffs) {
        if (coeffs.empty()) throw TruncationError("jet needs at least the value");
        Jet j;
        j.t_ = std::move(coeffs);
        return j;
    }
    // The constant function v at the given truncation order.
    static Jet constant(T v, int order) {
        Jet j;
        j.t_.assign(static_cast<std::size_t>(order) + 1, T{});
        j.t_[0] = std::move(v);
        return j;
    }

    int order() const { return static_cast<int>(t_.size()) - 1; }
    const T& value() const { return t_[0]; }
    const T& taylor(int k) const {
        if (k > order()) throw TruncationError("jet coefficient " + std::to_string(k) + " beyond order " + std::to_string(order()));
        return t_[static_cast<std::size_t>(k)];
    }
    const std::vector<T>& taylor_coeffs() const { return t_; }
    // k-th derivative at 0.
    T derivative_value(int k) const {
        T v = taylor(k);
        mpq_class fact = 1;
        for (int m = 2; m <= k; ++m) fact *= m;
        return v * GaussianRational(fact);
    }

    Jet derivative() const {
        if (order() == 0) throw TruncationError("normal derivative exceeds jet order");
        std::vector<T> d;
        d.reserve(t_.size() - 1);
        for (std::size_t k = 1; k < t_.size(); ++k) d.push_back(t_[k] * GaussianRational(static_cast<long>(k)));
        return from_taylor(std::move(d));
    }

    Jet truncated(int ord) const {
        if (ord >= order()) return *this;
        std::vector<T> d(t_.begin(), t_.begin() + ord + 1);
        return from_taylor(std::move(d));
    }

    template <class F>
    auto map(F&& fn) const {
        using U = decltype(fn(t_[0]));
        std::vector<U> d;
        d.reserve(t_.size());
        for (auto& v : t_) d.push_back(fn(v));
        return Jet<U>::from_taylor(std::move(d));
    }

    Jet& operator+=(const Jet& o) {
        int ord = std::min(order(), o.order());
        t_.resize(static_cast<std::size_t>(ord) + 1);
        for (int k = 0; k <= ord; ++k) t_[k] = t_[k] + o.t_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        int ord = std::min(order(), o.order());
        t_.resize(static_cast<std::size_t>(ord) + 1);
        for (int k = 0; k <= ord; ++k) t_[k] = t_[k] - o.t_[k];
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

    template <class U>
    friend auto operator*(const Jet& a, const Jet<U>& b) {
        using R = decltype(a.t_[0] * b.taylor_coeffs()[0]);
        int ord = std::min(a.order(), b.order());
        std::vector<R> d(static_cast<std::size_t>(ord) + 1);
        for (int k = 0; k <= ord; ++k) {
            R acc{};
            for (int m = 0; m <= k; ++m) acc = acc + a.t_[m] * b.taylor_coeffs()[k - m];
            d[k] = std::move(acc);
        }
        return Jet<R>::from_taylor(std::move(d));
    }

    Jet scaled(const GaussianRational& c) const {
        Jet out = *this;
        for (auto& v : out.t_) v = v * c;
        return out;
    }

    friend bool operator==(const Jet& a, const Jet& b) { return a.t_ == b.t_; }

private:
    std::vector<T> t_;
};

// u^p for a jet with u(0) = 1 and rational p, by the binomial series in (u - 1).
template <class T>
Jet<T> unit_jet_power(const Jet<T>& u, const mpq_class& p, const T& one) {
    if (!(u.value() == one)) throw InvariantError("unit_jet_power requires value 1");
    int ord = u.order();
    std::vector<T> dt = u.taylor_coeffs();
    dt[0] = T{};
    Jet<T> delta = Jet<T>::from_taylor(dt);
    Jet<T> term = Jet<T>::constant(one, ord);
    Jet<T> out = Jet<T>::constant(one, ord);
    for (int m = 1; m <= ord; ++m) {
        term = term * delta;
        out += term.scaled(GaussianRational(binomial(p, static_cast<unsigned>(m))));
    }
    return out;
}

}  // namespace ncres
