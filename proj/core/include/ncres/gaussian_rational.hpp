#pragma once
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ncres {

// Exact re + im*i with GMP rationals (always canonical).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0);
    static GaussianRational from_fraction(long num, long den, long inum = 0, long iden = 1);
    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;
    GaussianRational pow(long e) const;
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    // Arbitrary but total order, used only for canonical sorting.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    // "p/q", "r/s*i", "p/q+r/s*i"; parse also accepts "r/s i".
    std::string str() const;
    static GaussianRational parse(std::string_view text);

    double real_double() const { return re_.get_d(); }
    double imag_double() const { return im_.get_d(); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::string rational_str(const mpq_class& q);
mpq_class parse_rational(std::string_view text);

// Generalized binomial C(p, k) for rational p.
mpq_class binomial(const mpq_class& p, unsigned k);

}  // namespace ncres
