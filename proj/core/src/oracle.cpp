#include "ncres/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "ncres/errors.hpp"

namespace ncres {

namespace {

constexpr double kPi = std::numbers::pi;

using Dense = Eigen::MatrixXcd;
using Sparse = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

// Nodes and weights of the N-point Gauss-Legendre rule on [-1, 1].
struct Rule {
    std::vector<double> x, w;
};

Rule gauss_legendre(int n) {
    Rule r;
    auto zeros = boost::math::legendre_p_zeros<double>(n);  // nonnegative half
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
        double z = *it;
        double dp = boost::math::legendre_p_prime(n, z);
        double w = 2.0 / ((1 - z * z) * dp * dp);
        if (z == 0.0) {
            r.x.push_back(0.0);
            r.w.push_back(w);
        } else {
            r.x.push_back(-z);
            r.w.push_back(w);
        }
    }
    std::size_t half = r.x.size();
    for (std::size_t k = half; k-- > 0;) {
        if (r.x[k] == 0.0) continue;
        r.x.push_back(-r.x[k]);
        r.w.push_back(r.w[k]);
    }
    return r;
}

// Gauss-Chebyshev rule of the second kind, weight sqrt(1 - t^2).
Rule chebyshev_second(int n) {
    Rule r;
    for (int k = 1; k <= n; ++k) {
        double th = k * kPi / (n + 1);
        r.x.push_back(std::cos(th));
        r.w.push_back(kPi / (n + 1) * std::sin(th) * std::sin(th));
    }
    return r;
}

double grid(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng) / 64.0;
}

double nonzero_grid(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> mag(8, 128);
    std::bernoulli_distribution sign(0.5);
    double v = mag(rng) / 64.0;
    return sign(rng) ? -v : v;
}

Sparse to_numeric(const ExprMatrix& m, const Instantiation& inst) {
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int r = 0; r < m.dim(); ++r)
        for (auto& [c, v] : m.row(r)) trip.emplace_back(r, c, instantiate(v, inst));
    Sparse s(m.dim(), m.dim());
    s.setFromTriplets(trip.begin(), trip.end());
    return s;
}

struct NumericTerm {
    RKey key;
    std::vector<std::pair<FWord, Sparse>> parts;
};

std::vector<NumericTerm> to_numeric(const RestrictedSymbol& r, const Instantiation& inst) {
    std::vector<NumericTerm> out;
    for (auto& [k, e] : r.terms()) {
        NumericTerm t{k, {}};
        for (auto& [w, m] : e.terms()) t.parts.emplace_back(w, to_numeric(m, inst));
        out.push_back(std::move(t));
    }
    return out;
}

Complex pair_trace(const NumericTerm& a, const NumericTerm& b, const Instantiation& inst) {
    Complex acc = 0;
    for (auto& [wa, ma] : a.parts)
        for (auto& [wb, mb] : b.parts) {
            Sparse bt = mb.transpose();
            Complex t = ma.cwiseProduct(bt).sum();
            if (t == Complex(0)) continue;
            FWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            acc += t * word_trace(w, inst);
        }
    return acc;
}

}  // namespace

const std::vector<Complex>& Instantiation::letter(const FGenerator& g) const {
    auto it = letters.find(g);
    if (it == letters.end()) throw Error("no numeric value for letter " + g.name());
    return it->second;
}

Instantiation make_instantiation(std::uint64_t seed, int dim_f) {
    Instantiation inst;
    inst.seed = seed;
    inst.dim_f = dim_f;
    std::mt19937_64 rng(seed);
    inst.params.fill(std::numeric_limits<double>::quiet_NaN());
    inst.params[static_cast<std::size_t>(Param::PI)] = kPi;
    inst.params[static_cast<std::size_t>(Param::OMEGA4)] = 8.0 * kPi * kPi / 3.0;
    inst.params[static_cast<std::size_t>(Param::DIMF)] = dim_f;
    inst.params[static_cast<std::size_t>(Param::H1)] = nonzero_grid(rng);
    inst.params[static_cast<std::size_t>(Param::H2)] = nonzero_grid(rng);
    inst.params[static_cast<std::size_t>(Param::F)] = grid(rng, 32, 160);
    for (int k = 1; k <= 6; ++k) inst.params[static_cast<std::size_t>(df_param(k))] = nonzero_grid(rng);
    for (GenKind kind : {GenKind::A, GenKind::AStar, GenKind::SigmaF, GenKind::SigmaFe, GenKind::Omega, GenKind::OmegaStar})
        for (int axis = 1; axis <= 6; ++axis) {
            std::vector<Complex> m(static_cast<std::size_t>(dim_f * dim_f));
            for (auto& v : m) {
                double re = grid(rng, -64, 64);
                double im = grid(rng, -64, 64);
                v = {re, im};
            }
            inst.letters[gen(kind, axis)] = std::move(m);
        }
    return inst;
}

Complex word_trace(const FWord& w, const Instantiation& inst) {
    int n = inst.dim_f;
    Dense acc = Dense::Identity(n, n);
    for (auto& g : w) {
        const auto& v = inst.letter(g);
        Dense m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = v[static_cast<std::size_t>(r * n + c)];
        acc = acc * m;
    }
    return acc.trace();
}

Complex instantiate(const ScalarExpr& e, const Instantiation& inst) {
    Complex acc = 0;
    for (auto& [m, c] : e.terms()) {
        Complex t(c.real_double(), c.imag_double());
        for (std::size_t k = 0; k < kParamCount; ++k) {
            int p = m.pw[k];
            if (p == 0) continue;
            double v = inst.params[k];
            if (std::isnan(v)) throw Error("no numeric value for parameter " + param_name(static_cast<Param>(k)));
            t *= std::pow(v, p);
        }
        for (auto& tr : m.traces) t *= word_trace(tr.word, inst);
        acc += t;
    }
    return acc;
}

std::vector<Complex> instantiate_endo(const EndoElement& e, const Instantiation& inst, int& size_out) {
    int d = e.dim(), n = inst.dim_f;
    int size = d * n;
    Dense out = Dense::Zero(size, size);
    for (auto& [w, m] : e.terms()) {
        Dense word = Dense::Identity(n, n);
        for (auto& g : w) {
            const auto& v = inst.letter(g);
            Dense lm(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) lm(r, c) = v[static_cast<std::size_t>(r * n + c)];
            word = word * lm;
        }
        for (int r = 0; r < d; ++r)
            for (auto& [c, v] : m.row(r)) out.block(r * n, c * n, n, n) += instantiate(v, inst) * word;
    }
    size_out = size;
    return std::vector<Complex>(out.data(), out.data() + static_cast<std::size_t>(size) * size);
}

Complex quad_line(const std::function<Complex(double)>& fn, const QuadratureScheme& scheme) {
    auto run = [&](int n) {
        Rule r = gauss_legendre(n);
        Complex acc = 0;
        for (std::size_t k = 0; k < r.x.size(); ++k) {
            double th = r.x[k] * kPi / 2;
            double c = std::cos(th);
            acc += r.w[k] * fn(std::tan(th)) / (c * c);
        }
        return acc * (kPi / 2);
    };
    int n = scheme.line_nodes;
    Complex prev = run(n);
    while (n * 2 <= scheme.line_max_nodes) {
        n *= 2;
        Complex cur = run(n);
        if (std::abs(cur - prev) <= scheme.line_tol * (1 + std::abs(cur))) return cur;
        prev = cur;
    }
    throw Error("line quadrature did not stabilize");
}

namespace {

struct SphereRule {
    Rule t1, t2, t3;
    int m = 0;
};

SphereRule sphere_rule(int degree) {
    SphereRule s;
    s.t1 = gauss_legendre((degree + 4) / 2);  // weight (1 - t^2) folded into the integrand
    s.t2 = chebyshev_second((degree + 2) / 2);
    s.t3 = gauss_legendre((degree + 2) / 2);
    s.m = degree + 1;
    return s;
}

}  // namespace

Complex quad_sphere(const std::function<Complex(const std::array<double, 5>&)>& fn, const QuadratureScheme& scheme) {
    SphereRule s = sphere_rule(scheme.sphere_degree);
    Complex acc = 0;
    for (std::size_t a = 0; a < s.t1.x.size(); ++a) {
        double t1 = s.t1.x[a], r1 = std::sqrt(1 - t1 * t1), w1 = s.t1.w[a] * (1 - t1 * t1);
        for (std::size_t b = 0; b < s.t2.x.size(); ++b) {
            double t2 = s.t2.x[b], r2 = std::sqrt(1 - t2 * t2), w2 = s.t2.w[b];
            for (std::size_t c = 0; c < s.t3.x.size(); ++c) {
                double t3 = s.t3.x[c], r3 = std::sqrt(1 - t3 * t3), w3 = s.t3.w[c];
                for (int d = 0; d < s.m; ++d) {
                    double ph = 2 * kPi * d / s.m;
                    std::array<double, 5> x{t1, r1 * t2, r1 * r2 * t3, r1 * r2 * r3 * std::cos(ph), r1 * r2 * r3 * std::sin(ph)};
                    acc += w1 * w2 * w3 * (2 * kPi / s.m) * fn(x);
                }
            }
        }
    }
    return acc;
}

double quad_sphere_monomial(const TangentialExponents& a, const QuadratureScheme& scheme) {
    int deg = 0;
    for (auto v : a) deg += v;
    if (deg > scheme.sphere_degree) throw Error("monomial degree exceeds sphere quadrature exactness");
    return quad_sphere(
               [&a](const std::array<double, 5>& x) {
                   double v = 1;
                   for (int i = 0; i < 5; ++i) v *= std::pow(x[i], a[i]);
                   return Complex(v);
               },
               scheme)
        .real();
}

namespace {

Complex line_monomial(const RKey& k, const QuadratureScheme& scheme) {
    const Complex i(0, 1);
    return quad_line(
        [&k, i](double x) { return std::pow(Complex(x), k.n) / (std::pow(x - i, k.pa) * std::pow(x + i, k.pb)); }, scheme);
}

}  // namespace

Complex numeric_case_value(const CaseResult& r, const Instantiation& inst, const QuadratureScheme& scheme) {
    std::map<TangentialExponents, double> sphere_cache;
    std::map<std::array<int, 3>, Complex> line_cache;
    Complex total = 0;
    for (auto& in : r.integrands) {
        auto left = to_numeric(in.left, inst);
        auto right = to_numeric(in.right, inst);
        Complex acc = 0;
        for (auto& a : left)
            for (auto& b : right) {
                RKey k = a.key * b.key;
                auto sit = sphere_cache.find(k.a);
                if (sit == sphere_cache.end()) sit = sphere_cache.emplace(k.a, quad_sphere_monomial(k.a, scheme)).first;
                if (std::abs(sit->second) < 1e-13) continue;
                std::array<int, 3> lk{k.n, k.pa, k.pb};
                auto lit = line_cache.find(lk);
                if (lit == line_cache.end()) lit = line_cache.emplace(lk, line_monomial(k, scheme)).first;
                acc += pair_trace(a, b, inst) * sit->second * lit->second;
            }
        total += acc * Complex(in.prefactor.real_double(), in.prefactor.imag_double());
    }
    return total;
}

OracleCheck check_case(const CaseResult& r, const Instantiation& inst, double tol, const QuadratureScheme& scheme) {
    OracleCheck c;
    c.case_id = r.case_id;
    c.numeric = numeric_case_value(r, inst, scheme);
    c.exact = instantiate(r.value, inst);
    c.rel_error = std::abs(c.numeric - c.exact) / std::max(1.0, std::abs(c.exact));
    c.agrees = c.rel_error <= tol;
    return c;
}

double random_contour_check(std::uint64_t seed, int count, const QuadratureScheme& scheme) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pole(1, 5);
    double worst = 0;
    const Complex i(0, 1);
    for (int t = 0; t < count; ++t) {
        int pa = pole(rng), pb = pole(rng);
        std::uniform_int_distribution<int> deg(0, pa + pb - 2);
        // random polynomial numerator of degree <= pa + pb - 2
        int d = deg(rng);
        std::vector<GaussianRational> coeffs;
        for (int k = 0; k <= d; ++k) {
            std::uniform_int_distribution<int> q(-20, 20);
            coeffs.push_back(GaussianRational::from_fraction(q(rng), 7, q(rng), 5));
        }
        GaussianRational exact_over_pi;
        for (int k = 0; k <= d; ++k) exact_over_pi += coeffs[k] * line_integral_over_pi(k, pa, pb);
        Complex exact = Complex(exact_over_pi.real_double(), exact_over_pi.imag_double()) * kPi;
        Complex num = quad_line(
            [&](double x) {
                Complex p = 0, xp = 1;
                for (auto& c : coeffs) {
                    p += Complex(c.real_double(), c.imag_double()) * xp;
                    xp *= x;
                }
                return p / (std::pow(x - i, pa) * std::pow(x + i, pb));
            },
            scheme);
        worst = std::max(worst, std::abs(num - exact) / std::max(1.0, std::abs(exact)));
    }
    return worst;
}

double random_moment_check(const QuadratureScheme& scheme, int max_degree) {
    double worst = 0;
    const double omega = 8.0 * kPi * kPi / 3.0;
    TangentialExponents a{};
    auto rec = [&](auto&& self, int axis, int left) -> void {
        if (axis == 5) {
            double exact = sphere_moment_over_omega(a).get_d() * omega;
            double num = quad_sphere_monomial(a, scheme);
            double err = std::abs(num - exact);
            worst = std::max(worst, exact != 0.0 ? err / std::abs(exact) : err);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[axis] = static_cast<std::int16_t>(v);
            self(self, axis + 1, left - v);
        }
        a[axis] = 0;
    };
    rec(rec, 0, max_degree);
    return worst;
}

double homogeneity_check(const PreSymbol& p, int order, std::uint64_t seed, const std::vector<double>& scales, int samples) {
    Instantiation inst = make_instantiation(seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto eval = [&](const std::array<double, 6>& xi) {
        double s = 0;
        for (int i = 0; i < 5; ++i) s += xi[i] * xi[i];
        double q = s + xi[5] * xi[5];
        int size = 0;
        Dense acc;
        for (auto& [k, j] : p.terms()) {
            double w = std::pow(s, k.s) * std::pow(xi[5], k.n) * std::pow(q, -k.q);
            for (int i = 0; i < 5; ++i) w *= std::pow(xi[i], k.a[i]);
            auto v = instantiate_endo(j.value(), inst, size);
            Eigen::Map<Dense> m(v.data(), size, size);
            if (acc.size() == 0) acc = Dense::Zero(size, size);
            acc += w * m;
        }
        return acc;
    };
    double worst = 0;
    for (int t = 0; t < samples; ++t) {
        std::array<double, 6> xi;
        for (auto& v : xi) v = u(rng);
        Dense base = eval(xi);
        for (double sc : scales) {
            std::array<double, 6> y;
            for (int i = 0; i < 6; ++i) y[i] = sc * xi[i];
            Dense scaled = eval(y);
            Dense expect = std::pow(sc, order) * base;
            worst = std::max(worst, (scaled - expect).norm() / std::max(1e-300, expect.norm()));
        }
    }
    return worst;
}

}  // namespace ncres
