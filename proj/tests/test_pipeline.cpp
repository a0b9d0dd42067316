#include <gtest/gtest.h>

#include <map>

#include "ncres/errors.hpp"
#include "ncres/pipeline.hpp"
#include "ncres/selftest.hpp"

using namespace ncres;

namespace {

const BoundaryTotal& total_of(Family fam) {
    static std::map<Family, BoundaryTotal> cache;
    auto it = cache.find(fam);
    if (it == cache.end()) {
        SymbolCatalog cat(fam, {});
        it = cache.emplace(fam, assemble_total(fam, compute_cases(cat, case_groups(), 2))).first;
    }
    return it->second;
}

const CaseResult& case_of(Family fam, const std::string& id) {
    for (auto& c : total_of(fam).cases)
        if (c.case_id == id) return c;
    throw Error("missing case " + id);
}

}  // namespace

TEST(Enumeration, NineTuplesInFiveGroups) {
    for (auto fam : {Family::Dirac, Family::Signature}) {
        auto cases = enumerate_cases(fam);
        ASSERT_EQ(cases.size(), 9u);
        std::map<std::string, int> per_group;
        for (auto& c : cases) {
            EXPECT_EQ(c.r + c.l - c.k - c.j - c.alpha_abs() - 1, -6) << c.str();
            ++per_group[c.group];
        }
        EXPECT_EQ(per_group, (std::map<std::string, int>{{"aI", 5}, {"aII", 1}, {"aIII", 1}, {"b", 1}, {"c", 1}}));
    }
}

TEST(Enumeration, MixedGroupsSwapBetweenFamilies) {
    EXPECT_EQ(group_label(Family::Dirac, -1, -4, 0, 0, 0), "b");
    EXPECT_EQ(group_label(Family::Dirac, -2, -3, 0, 0, 0), "c");
    EXPECT_EQ(group_label(Family::Signature, -1, -4, 0, 0, 0), "c");
    EXPECT_EQ(group_label(Family::Signature, -2, -3, 0, 0, 0), "b");
}

TEST(DiracCases, Values) {
    const auto F = Family::Dirac;
    EXPECT_TRUE(case_of(F, "aI").value.is_zero());
    EXPECT_EQ(case_of(F, "aII").value.str(), "pi*f^-1*df_n*Omega4*dimF - 15/16*pi*h1*Omega4*dimF");
    EXPECT_EQ(case_of(F, "aIII").value.str(), "pi*f^-1*df_n*Omega4*dimF + 25/16*pi*h1*Omega4*dimF");
    const auto& b = case_of(F, "b");
    EXPECT_EQ(b.parts.at("base").str(),
              "-2*pi*tr(A_n)*Omega4 - 9/2*pi*tr(As_n)*Omega4 + 3/2*pi*tr(sig_n)*Omega4 - 81/16*pi*h1*Omega4*dimF");
    EXPECT_EQ(b.parts.at("df").str(), "3*pi*f^-1*df_n*Omega4*dimF");
    EXPECT_EQ(b.parts.at("dfinv").str(), "-2*pi*f^-1*df_n*Omega4*dimF");
    EXPECT_EQ(case_of(F, "c").value.str(),
              "-2*pi*tr(A_n)*Omega4 - 2*pi*tr(sig_n)*Omega4 + 55/16*pi*h1*Omega4*dimF");
    EXPECT_EQ(total_of(F).h1_coefficient, GaussianRational(-1));
    EXPECT_EQ(total_of(F).fjet_coefficient, GaussianRational(3));
}

TEST(SignatureCases, Values) {
    const auto F = Family::Signature;
    EXPECT_TRUE(case_of(F, "aI").value.is_zero());
    EXPECT_EQ(case_of(F, "aII").value.str(), "8*pi*f^-1*df_n*Omega4*dimF - 15/2*pi*h1*Omega4*dimF");
    EXPECT_EQ(case_of(F, "aIII").value.str(), "8*pi*f^-1*df_n*Omega4*dimF + 25/2*pi*h1*Omega4*dimF");
    EXPECT_EQ(case_of(F, "b").value.str(), "-16*pi*tr(sige_n)*Omega4 + 55/2*pi*h1*Omega4*dimF");
    EXPECT_EQ(case_of(F, "c").value.str(),
              "8*pi*f^-1*df_n*Omega4*dimF + 12*pi*tr(sige_n)*Omega4 - 81/2*pi*h1*Omega4*dimF");
    EXPECT_EQ(total_of(F).h1_coefficient, GaussianRational(-8));
    EXPECT_EQ(total_of(F).fjet_coefficient, GaussianRational(24));
}

TEST(Cases, InvariantsHold) {
    for (auto fam : {Family::Dirac, Family::Signature})
        for (auto& c : total_of(fam).cases) EXPECT_NO_THROW(check_case_invariants(c)) << c.case_id;
}

TEST(Cases, NoCurvatureOrSecondDerivatives) {
    for (auto fam : {Family::Dirac, Family::Signature}) {
        auto& t = total_of(fam).total;
        EXPECT_FALSE(t.mentions(Param::H2));
        EXPECT_FALSE(t.mentions_curvature());
    }
}

TEST(Cases, TotalIsOrderIndependent) {
    auto cases = total_of(Family::Dirac).cases;
    std::reverse(cases.begin(), cases.end());
    EXPECT_EQ(assemble_total(Family::Dirac, cases).total, total_of(Family::Dirac).total);
}

TEST(Cases, SelectKind) {
    auto v = case_of(Family::Dirac, "c").value;
    EXPECT_EQ(select_kind(v, "h1").str(), "55/16*pi*h1*Omega4*dimF");
    EXPECT_EQ(select_kind(v, "trace").str(), "-2*pi*tr(A_n)*Omega4 - 2*pi*tr(sig_n)*Omega4");
    EXPECT_TRUE(select_kind(v, "f").is_zero());
    EXPECT_EQ(select_kind(v, "all"), v);
}

TEST(Cases, ZeroJetOrderIsRejected) {
    CatalogOptions opts;
    opts.jet_order = 0;
    EXPECT_THROW(
        {
            SymbolCatalog cat(Family::Dirac, opts);
            compute_case(cat, "aII");
        },
        Error);
}

TEST(Cases, OppositeProjectionSignNegates) {
    SymbolCatalog cat(Family::Dirac, {});
    PipelineOptions flip;
    flip.pi_plus_sign = -1;
    auto r = compute_case(cat, "aII", flip);
    EXPECT_EQ(r.value, -case_of(Family::Dirac, "aII").value);
}

TEST(Cases, PermutationInvariance) {
    auto r = check_permutation_invariance(2);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Cases, TrivialBundle) {
    auto r = check_trivial_bundle(2);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Cases, DeterministicAcrossWorkerCounts) {
    for (auto fam : {Family::Dirac, Family::Signature}) {
        auto r = check_determinism(fam);
        EXPECT_TRUE(r.pass) << r.detail;
    }
}
