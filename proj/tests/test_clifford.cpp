#include <gtest/gtest.h>

#include "ncres/clifford.hpp"
#include "ncres/errors.hpp"
#include "ncres/selftest.hpp"

using namespace ncres;

TEST(Clifford, RelationsExhaustive) {
    auto r = check_clifford_relations();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Clifford, SpinEntriesAreUnitsOrZero) {
    auto rep = build_spin_rep();
    const std::vector<GaussianRational> allowed{1, -1, GaussianRational::i(), -GaussianRational::i()};
    for (auto& m : rep.c)
        for (int r = 0; r < rep.rep_dim; ++r)
            for (auto& [c, v] : m.row(r)) EXPECT_NE(std::find(allowed.begin(), allowed.end(), v), allowed.end());
}

TEST(Clifford, SpinTraces) {
    auto rep = build_spin_rep();
    EXPECT_EQ(rep_trace(rep, rep.identity()), GaussianRational(8));
    EXPECT_EQ(rep_trace(rep, rep.c[0] * rep.c[0]), GaussianRational(-8));
    EXPECT_TRUE(rep_trace(rep, rep.c[0] * rep.c[1]).is_zero());
    EXPECT_EQ(rep_trace(rep, rep.c[0] * rep.c[1] * rep.c[0] * rep.c[1]), GaussianRational(-8));
    auto r = check_spin_traces();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Clifford, PermutedSpinRepSatisfiesRelations) {
    auto rep = build_spin_rep({5, 3, 1, 0, 2, 4});
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            ExactMatrix ac = rep.c[a] * rep.c[b] + rep.c[b] * rep.c[a];
            ExactMatrix expect = a == b ? ExactMatrix::identity(8, GaussianRational(-2)) : ExactMatrix(8);
            EXPECT_EQ(ac, expect);
        }
}

TEST(Clifford, ExteriorRep) {
    auto rep = build_exterior_rep();
    EXPECT_EQ(rep.rep_dim, 64);
    EXPECT_EQ(rep_trace(rep, rep.identity()), GaussianRational(64));
    EXPECT_EQ(rep.chat[0] * rep.chat[0], rep.identity());
    ExactMatrix m = rep.c[0] * rep.chat[0];
    GaussianRational blocks;
    for (int d = 0; d <= 6; ++d) blocks += degree_block_trace(m, d);
    EXPECT_EQ(blocks, rep_trace(rep, m));
}

TEST(Clifford, BCoefficients) {
    const std::array<long, 7> expect{1, 2, -1, -4, -1, 2, 1};
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(b_coefficient(m), expect[static_cast<std::size_t>(m)]);
    EXPECT_THROW(b_coefficient(7), Error);
    EXPECT_THROW(b_coefficient(-1), Error);
    auto r = check_b_coefficients();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Clifford, DumpIsExactText) {
    auto text = build_spin_rep().dump();
    EXPECT_NE(text.find("c1"), std::string::npos);
    EXPECT_EQ(text.find("e-"), std::string::npos);
}
