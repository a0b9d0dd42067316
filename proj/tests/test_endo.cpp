#include <gtest/gtest.h>

#include <random>

#include "ncres/catalog.hpp"
#include "ncres/endo.hpp"
#include "ncres/selftest.hpp"

using namespace ncres;

namespace {

EndoElement random_endo(const CliffordRep& rep, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> axis(0, 5), kind(0, 3), coef(-3, 3), len(0, 2);
    const GenKind kinds[] = {GenKind::A, GenKind::AStar, GenKind::SigmaF, GenKind::Omega};
    EndoElement out;
    for (int t = 0; t < 3; ++t) {
        FWord w;
        for (int k = len(rng); k > 0; --k) w.push_back(gen(kinds[kind(rng)], axis(rng) + 1));
        out += EndoElement::from_matrix(rep.c[static_cast<std::size_t>(axis(rng))], w) * GaussianRational(coef(rng));
    }
    return out;
}

}  // namespace

TEST(Endo, IdentityAndScalars) {
    auto rep = build_spin_rep();
    auto id = EndoElement::identity(8);
    auto a = EndoElement::from_matrix(rep.c[0], {gen(GenKind::A, 1)});
    EXPECT_EQ(id * a, a);
    EXPECT_EQ(a * id, a);
    EXPECT_EQ(endo_trace(id), ScalarExpr::parse("8*dimF"));
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Endo, LettersDoNotCommute) {
    auto rep = build_spin_rep();
    auto a = EndoElement::from_matrix(rep.identity(), {gen(GenKind::A, 1)});
    auto b = EndoElement::from_matrix(rep.identity(), {gen(GenKind::AStar, 2)});
    EXPECT_NE(a * b, b * a);
    EXPECT_EQ(endo_trace(a * b), endo_trace(b * a));
    EXPECT_EQ(endo_trace(a * b).str(), "8*tr(A_1.As_2)");
}

TEST(Endo, CliffordSquareCarriesWord) {
    auto rep = build_spin_rep();
    auto a = EndoElement::from_matrix(rep.c[0], {gen(GenKind::A, 1)});
    auto expect = EndoElement::from_matrix(rep.identity(), {gen(GenKind::A, 1), gen(GenKind::A, 1)}) * GaussianRational(-1);
    EXPECT_EQ(a * a, expect);
}

TEST(Endo, TraceIsCyclicAndLinear) {
    auto rep = build_spin_rep();
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        auto a = random_endo(rep, rng), b = random_endo(rep, rng), c = random_endo(rep, rng);
        EXPECT_EQ(endo_trace(a * b), endo_trace(b * a));
        EXPECT_EQ(endo_trace(a * b * c), endo_trace(c * a * b));
        EXPECT_EQ(endo_trace(a + b), endo_trace(a) + endo_trace(b));
        EXPECT_EQ(endo_trace_product(a, b), endo_trace(a * b));
    }
}

TEST(Endo, CliffordWithLetters) {
    auto rep = build_spin_rep();
    auto cA = clifford_with_letters(rep, false, GenKind::A);
    auto cn = EndoElement::from_matrix(rep.c[5]);
    // tr(c_n c(A)) = -8 tr(A_n)
    EXPECT_EQ(endo_trace(cn * cA), ScalarExpr::parse("-8*tr(A_n)"));
}

TEST(Endo, TraceIdentitiesHold) {
    for (auto fam : {Family::Dirac, Family::Signature}) {
        auto r = check_trace_identities(fam);
        EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
    }
}
