#include <gtest/gtest.h>

#include "ncres/catalog.hpp"
#include "ncres/errors.hpp"
#include "ncres/geometry.hpp"
#include "ncres/selftest.hpp"

using namespace ncres;

namespace {

std::array<GaussianRational, 6> point(long a, long b, long c, long d, long e, long n) {
    return {GaussianRational(a), GaussianRational(b), GaussianRational(c),
            GaussianRational(d), GaussianRational(e), GaussianRational(n)};
}

}  // namespace

TEST(Geometry, CollarChecks) {
    auto r = check_collar_geometry();
    EXPECT_TRUE(r.pass) << r.detail;
    auto g = collar_geometry();
    EXPECT_EQ(g.inverse_metric[0][0], ScalarExpr(1));
    EXPECT_EQ(g.inverse_metric[5][5], ScalarExpr(1));
    EXPECT_TRUE(g.inverse_metric[0][5].is_zero());
}

TEST(Symbol, CliffordSymbolSquaresToMinusQ) {
    SymbolCatalog cat(Family::Dirac, {});
    auto sq = (cat.c_xi() * cat.c_xi() + cat.q_norm()).at_base();
    EXPECT_TRUE(sq.evaluate(point(1, 2, 0, -1, 3, 2)).is_zero());
}

TEST(Symbol, NormalDerivativeOfInverseQ) {
    SymbolCatalog cat(Family::Dirac, {});
    auto lhs = symbol_derivative(cat.inv_q0(1), {VarKind::XiN});
    auto rhs = (cat.xi(5) * cat.inv_q0(2)).scaled(GaussianRational(-2));
    for (auto p : {point(1, 0, 0, 0, 0, 1), point(1, 2, 3, 0, -1, 2)})
        EXPECT_EQ(lhs.evaluate(p), rhs.evaluate(p));
}

TEST(Symbol, OrdersOfCatalogEntries) {
    for (auto fam : {Family::Dirac, Family::Signature}) {
        SymbolCatalog cat(fam, {});
        EXPECT_EQ(cat.sigma_m1().order(), -1);
        EXPECT_EQ(cat.sigma_m2().order(), -2);
        EXPECT_EQ(cat.sigma_3().order(), 3);
        EXPECT_EQ(cat.sigma_2().order(), 2);
        EXPECT_EQ(cat.sigma_m3().order(), -3);
        EXPECT_EQ(cat.sigma_m4().order(), -4);
    }
}

TEST(Symbol, RecursionReproducesClosedForm) {
    SymbolCatalog cat(Family::Dirac, {});
    auto [q3, q4] = inverse_symbol_recursion(cat, cat.leading(), cat.sigma_2());
    auto p = point(1, -1, 2, 0, 1, 3);
    EXPECT_EQ(q3.evaluate(p), cat.sigma_m3().evaluate(p));
    EXPECT_EQ(q4.evaluate(p), cat.sigma_m4().evaluate(p));
}

TEST(Symbol, RestrictionDecays) {
    SymbolCatalog cat(Family::Dirac, {});
    auto r1 = restrict(cat.sigma_m1().at_base());
    auto r3 = restrict(symbol_derivative(cat.sigma_m3(), {VarKind::XiN}).at_base());
    EXPECT_TRUE(r1.decays());
    EXPECT_TRUE(r3.decays());
    EXPECT_FALSE(r1.is_zero());
}

class SymbolFamily : public ::testing::TestWithParam<Family> {};

TEST_P(SymbolFamily, Leibniz) {
    auto r = check_leibniz(GetParam());
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST_P(SymbolFamily, Homogeneity) {
    auto r = check_homogeneity(GetParam(), 0, 1e-9);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST_P(SymbolFamily, Composition) {
    auto r = check_composition(GetParam(), 0);
    EXPECT_TRUE(r.pass) << r.detail;
}

INSTANTIATE_TEST_SUITE_P(Families, SymbolFamily, ::testing::Values(Family::Dirac, Family::Signature),
                         [](const auto& info) { return family_name(info.param); });
