#include "ncres/gaussian_rational.hpp"

#include <cctype>

#include "ncres/errors.hpp"

namespace ncres {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::from_fraction(long num, long den, long inum, long iden) {
    return {mpq_class(num, den), mpq_class(inum, iden)};
}

GaussianRational GaussianRational::inverse() const {
    mpq_class n = norm2();
    if (sgn(n) == 0) throw Error("GaussianRational: division by zero");
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational base = *this, out(1);
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    for (std::size_t k = start; k < s.size(); ++k) {
        char ch = s[k];
        if (ch == '/' && !slash && k > start && k + 1 < s.size()) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad rational: " + s);
    }
    if (start == s.size()) throw ParseError("bad rational: " + s);
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return rational_str(re_);
    std::string imag = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : rational_str(im_) + "*i";
    if (sgn(re_) == 0) return imag;
    if (imag[0] == '-') return rational_str(re_) + imag;
    return rational_str(re_) + "+" + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty Gaussian rational");
    if (s.back() != 'i') return {parse_rational(s), 0};
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    // split at the last sign that is not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    mpq_class im;
    if (im_part.empty() || im_part == "+") im = 1;
    else if (im_part == "-") im = -1;
    else im = parse_rational(im_part);
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part);
    return {re, im};
}

mpq_class binomial(const mpq_class& p, unsigned k) {
    mpq_class out = 1;
    for (unsigned t = 0; t < k; ++t) {
        out *= (p - t);
        out /= (t + 1);
    }
    return out;
}

}  // namespace ncres
