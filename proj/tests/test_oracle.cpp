#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ncres/errors.hpp"
#include "ncres/oracle.hpp"

using namespace ncres;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOmega4 = 8.0 * kPi * kPi / 3.0;

}  // namespace

TEST(Instantiation, FixedParameters) {
    auto inst = make_instantiation(0);
    EXPECT_DOUBLE_EQ(instantiate(ScalarExpr::param(Param::DIMF), inst).real(), 2.0);
    EXPECT_DOUBLE_EQ(instantiate(ScalarExpr::param(Param::OMEGA4), inst).real(), kOmega4);
    EXPECT_DOUBLE_EQ(instantiate(ScalarExpr::param(Param::PI), inst).real(), kPi);
    double f = instantiate(ScalarExpr::param(Param::F), inst).real();
    EXPECT_GE(f, 0.5);
    EXPECT_LE(f, 2.5);
}

TEST(Instantiation, ReproduciblePerSeed) {
    auto e = ScalarExpr::parse("h1*tr(A_n.As_2) + f^-1*df_n*dimF");
    EXPECT_EQ(instantiate(e, make_instantiation(5)), instantiate(e, make_instantiation(5)));
    EXPECT_NE(instantiate(e, make_instantiation(5)), instantiate(e, make_instantiation(6)));
}

TEST(Instantiation, TraceOfLetters) {
    auto inst = make_instantiation(1);
    const auto& a = inst.letter(gen(GenKind::A, 6));
    Complex tr = a[0] + a[3];
    EXPECT_NEAR(std::abs(instantiate(ScalarExpr::parse("tr(A_n)"), inst) - tr), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(word_trace({}, inst) - Complex(2.0)), 0.0, 1e-15);
}

TEST(Quadrature, LineKnownIntegrals) {
    auto v = quad_line([](double x) { return Complex(1.0 / (1.0 + x * x)); });
    EXPECT_NEAR(std::abs(v - kPi), 0.0, 1e-12);
    auto w = quad_line([](double x) { return Complex(x * x / std::pow(1.0 + x * x, 3)); });
    EXPECT_NEAR(std::abs(w - kPi / 8.0), 0.0, 1e-12);
}

TEST(Quadrature, LineFailsToConverge) {
    QuadratureScheme s;
    s.line_max_nodes = 128;
    EXPECT_THROW(quad_line([](double x) { return Complex(1.0 / (1.0 + std::abs(x))); }, s), Error);
}

TEST(Quadrature, SphereKnownMoments) {
    EXPECT_NEAR(quad_sphere_monomial({0, 0, 0, 0, 0}), kOmega4, 1e-12);
    EXPECT_NEAR(quad_sphere_monomial({1, 0, 0, 0, 0}), 0.0, 1e-12);
    EXPECT_NEAR(quad_sphere_monomial({2, 0, 0, 0, 0}), kOmega4 / 5.0, 1e-12);
    EXPECT_NEAR(quad_sphere_monomial({2, 2, 2, 0, 0}), kOmega4 / 315.0, 1e-12);
    EXPECT_NEAR(quad_sphere_monomial({0, 0, 0, 4, 2}), 3.0 * kOmega4 / 315.0, 1e-12);
    EXPECT_THROW(quad_sphere_monomial({18, 0, 0, 0, 0}), Error);
}

TEST(Quadrature, RandomChecks) {
    EXPECT_LT(random_contour_check(0, 50), 1e-9);
    EXPECT_LT(random_moment_check(), 1e-9);
}

TEST(Oracle, DiracCasesAgreeOnThreeSeeds) {
    SymbolCatalog cat(Family::Dirac, {});
    for (const auto& id : {"aII", "c"}) {
        auto r = compute_case(cat, id);
        for (std::uint64_t seed : {0, 1, 2}) {
            auto chk = check_case(r, make_instantiation(seed));
            EXPECT_TRUE(chk.agrees) << id << " seed " << seed << " rel " << chk.rel_error;
        }
    }
}

TEST(Oracle, DetectsWrongValue) {
    SymbolCatalog cat(Family::Dirac, {});
    auto r = compute_case(cat, "aII");
    r.value += ScalarExpr::parse("1/16*pi*h1*Omega4*dimF");
    EXPECT_FALSE(check_case(r, make_instantiation(0)).agrees);
}
