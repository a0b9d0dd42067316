#include <gtest/gtest.h>

#include "ncres/errors.hpp"
#include "ncres/integrator.hpp"
#include "ncres/selftest.hpp"

using namespace ncres;

namespace {

GaussianRational q(long n, long d) { return GaussianRational::from_fraction(n, d); }

}  // namespace

TEST(PartialFractions, SimplePoles) {
    // 1/((x-i)(x+i)) = (-i/2)/(x-i) + (i/2)/(x+i)
    auto pf = partial_fractions_scalar(0, 1, 1);
    EXPECT_EQ(pf.upper.at(1), GaussianRational::from_fraction(0, 1, -1, 2));
    EXPECT_EQ(pf.lower.at(1), GaussianRational::from_fraction(0, 1, 1, 2));
    auto only = partial_fractions_scalar(0, 2, 0);
    EXPECT_EQ(only.upper.at(2), GaussianRational(1));
    EXPECT_TRUE(only.lower.empty());
}

TEST(PartialFractions, RandomExactChecks) {
    auto r = check_partial_fractions(0, 1000);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Projection, Properties) {
    auto r = check_projection(0, 1000);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Projection, KillsLowerHalfPlaneAnalytic) {
    RKey k;
    k.pb = 1;
    auto r = RestrictedSymbol::monomial(k, EndoElement::identity(8));
    EXPECT_TRUE(pi_plus(r).is_zero());
    EXPECT_EQ(pi_minus(r), r);
}

TEST(LineIntegral, KnownValues) {
    EXPECT_EQ(line_integral_over_pi(0, 1, 1), GaussianRational(1));
    EXPECT_EQ(line_integral_over_pi(0, 2, 2), q(1, 2));
    EXPECT_EQ(line_integral_over_pi(2, 2, 2), q(1, 2));
    EXPECT_EQ(line_integral_over_pi(0, 3, 3), q(3, 8));
    EXPECT_THROW(line_integral_over_pi(1, 1, 1), DecayError);
    EXPECT_THROW(line_integral_over_pi(1, 1, 0), DecayError);
}

TEST(LineIntegral, MatchesQuadrature) {
    auto r = check_contour_quadrature(0, 100, 1e-9);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(SphereMoments, KnownValues) {
    EXPECT_EQ(sphere_moment_over_omega({0, 0, 0, 0, 0}), mpq_class(1));
    EXPECT_EQ(sphere_moment_over_omega({2, 0, 0, 0, 0}), mpq_class(1, 5));
    EXPECT_EQ(sphere_moment_over_omega({4, 0, 0, 0, 0}), mpq_class(3, 35));
    EXPECT_EQ(sphere_moment_over_omega({2, 2, 0, 0, 0}), mpq_class(1, 35));
    EXPECT_EQ(sphere_moment_over_omega({1, 0, 0, 0, 0}), mpq_class(0));
    EXPECT_EQ(sphere_moment_over_omega({2, 2, 2, 0, 0}), mpq_class(1, 315));
    EXPECT_EQ(sphere_moment({2, 0, 0, 0, 0}).str(), "1/5*Omega4");
}

TEST(SphereMoments, MatchQuadrature) {
    auto r = check_moment_quadrature(1e-9);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Contour, NonDecayingInputThrows) {
    RKey k;
    k.n = 2;
    k.pa = 1;
    k.pb = 1;
    auto r = RestrictedSymbol::monomial(k, EndoElement::identity(8));
    EXPECT_THROW(contour_integral(r), DecayError);
}

TEST(Contour, IntegrateBoundaryIsLinear) {
    RKey k1, k2;
    k1.pa = 1;
    k1.pb = 1;
    k2.pa = 2;
    k2.pb = 2;
    k2.a[0] = 2;
    auto a = RestrictedSymbol::monomial(k1, EndoElement::identity(8));
    auto b = RestrictedSymbol::monomial(k2, EndoElement::identity(8));
    EXPECT_EQ(integrate_boundary(a + b), integrate_boundary(a) + integrate_boundary(b));
    EXPECT_EQ(integrate_boundary(a).str(), "8*pi*Omega4*dimF");
    EXPECT_EQ(integrate_boundary_pair(a, b), integrate_boundary(a * b));
}
