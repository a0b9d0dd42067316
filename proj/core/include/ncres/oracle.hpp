#pragma once
#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ncres/pipeline.hpp"

namespace ncres {

using Complex = std::complex<double>;

// Concrete numeric values for every formal parameter and letter.
struct Instantiation {
    std::uint64_t seed = 0;
    int dim_f = 2;
    std::array<double, kParamCount> params{};
    std::map<FGenerator, std::vector<Complex>> letters;  // dim_f x dim_f, row-major

    const std::vector<Complex>& letter(const FGenerator& g) const;
};

Instantiation make_instantiation(std::uint64_t seed, int dim_f = 2);

Complex word_trace(const FWord& w, const Instantiation& inst);
Complex instantiate(const ScalarExpr& e, const Instantiation& inst);
// Dense (rep_dim * dim_f)^2 matrix of an endomorphism, Clifford factor ⊗ letter product.
std::vector<Complex> instantiate_endo(const EndoElement& e, const Instantiation& inst, int& size_out);

struct QuadratureScheme {
    int line_nodes = 64;        // starting Gauss-Legendre order in the angle variable
    int line_max_nodes = 4096;  // doubling stops here
    double line_tol = 1e-12;
    int sphere_degree = 16;     // polynomial exactness on the 4-sphere
};

// Integral over the real line after xi = tan(theta); doubles nodes until stable.
Complex quad_line(const std::function<Complex(double)>& fn, const QuadratureScheme& scheme = {});

// Product rule on the 4-sphere in R^5; exact for polynomials up to scheme.sphere_degree.
Complex quad_sphere(const std::function<Complex(const std::array<double, 5>&)>& fn, const QuadratureScheme& scheme = {});
// Throws when the monomial degree exceeds the exactness degree.
double quad_sphere_monomial(const TangentialExponents& a, const QuadratureScheme& scheme = {});

// Numeric re-integration of a case from its integrands.
Complex numeric_case_value(const CaseResult& r, const Instantiation& inst, const QuadratureScheme& scheme = {});

struct OracleCheck {
    std::string case_id;
    Complex numeric;
    Complex exact;
    double rel_error = 0;
    bool agrees = false;
};

OracleCheck check_case(const CaseResult& r, const Instantiation& inst, double tol = 1e-9,
                       const QuadratureScheme& scheme = {});

// Randomized self-checks; each returns the worst relative error over `count` instances.
double random_contour_check(std::uint64_t seed, int count, const QuadratureScheme& scheme = {});
double random_moment_check(const QuadratureScheme& scheme = {}, int max_degree = 8);

// Ratio checks |q(t xi)| / |q(xi)| against t^order on random points.
double homogeneity_check(const PreSymbol& p, int order, std::uint64_t seed, const std::vector<double>& scales,
                         int samples = 5);

}  // namespace ncres
