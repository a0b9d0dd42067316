#pragma once
#include <array>
#include <cstdint>
#include <map>

#include "ncres/endo.hpp"
#include "ncres/symbol.hpp"

namespace ncres {

// Principal parts of xi^n / ((xi - i)^pa (xi + i)^pb); index k is the pole order.
struct ScalarPartialFractions {
    std::map<int, GaussianRational> upper;
    std::map<int, GaussianRational> lower;
};
ScalarPartialFractions partial_fractions_scalar(int n, int pa, int pb);

struct PartialFractions {
    std::map<int, EndoElement> upper;
    std::map<int, EndoElement> lower;
};
PartialFractions partial_fractions(const RKey& key, const EndoElement& coeff);

RestrictedSymbol pi_plus(const RestrictedSymbol& r);
RestrictedSymbol pi_minus(const RestrictedSymbol& r);

// Integral over the real line divided by pi (exact), requiring n <= pa + pb - 2.
GaussianRational line_integral_over_pi(int n, int pa, int pb);

using TangentialExponents = std::array<std::int16_t, 5>;

// Line integral of every term, grouped by tangential monomial; pi carried as a parameter.
std::map<TangentialExponents, EndoElement> contour_integral(const RestrictedSymbol& r);

// Sphere moment divided by Omega4; zero for odd exponents.
mpq_class sphere_moment_over_omega(const TangentialExponents& a);
ScalarExpr sphere_moment(const TangentialExponents& a);

// trace, sphere moment and line integral of a single restricted symbol.
ScalarExpr integrate_boundary(const RestrictedSymbol& integrand);

// Same for the product left * right, tracing each pair without forming the product.
ScalarExpr integrate_boundary_pair(const RestrictedSymbol& left, const RestrictedSymbol& right);

}  // namespace ncres
