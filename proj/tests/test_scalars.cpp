#include <gtest/gtest.h>

#include <random>

#include "ncres/errors.hpp"
#include "ncres/scalar_expr.hpp"

using namespace ncres;

namespace {

GaussianRational random_gr(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    return GaussianRational::from_fraction(num(rng), den(rng), num(rng), den(rng));
}

ScalarExpr random_expr(std::mt19937_64& rng) {
    static const std::vector<std::string> atoms{"pi", "h1", "f", "f^-1", "df_n", "df_2", "Omega4", "dimF",
                                                "tr(A_n)", "tr(As_1.sig_2)", "tr(w_n)"};
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    std::uniform_int_distribution<int> len(0, 3), terms(0, 4);
    ScalarExpr out;
    for (int t = terms(rng); t > 0; --t) {
        ScalarExpr m(random_gr(rng));
        for (int k = len(rng); k > 0; --k) m *= ScalarExpr::parse(atoms[pick(rng)]);
        out += m;
    }
    return out;
}

}  // namespace

TEST(GaussianRational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 1000; ++t) {
        auto a = random_gr(rng), b = random_gr(rng), c = random_gr(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, GaussianRational());
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), GaussianRational(1));
    }
}

TEST(GaussianRational, TextRoundTrip) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 1000; ++t) {
        auto a = random_gr(rng);
        EXPECT_EQ(GaussianRational::parse(a.str()), a) << a.str();
    }
    EXPECT_EQ(GaussianRational::from_fraction(3, 4).str(), "3/4");
    EXPECT_EQ(GaussianRational::from_fraction(0, 1, -5, 2).str(), "-5/2*i");
    EXPECT_EQ(GaussianRational::from_fraction(1, 2, 1, 3).str(), "1/2+1/3*i");
    EXPECT_EQ(GaussianRational::parse("5/4 i"), GaussianRational::from_fraction(0, 1, 5, 4));
}

TEST(GaussianRational, PowersAndBinomials) {
    auto i = GaussianRational::i();
    EXPECT_EQ(i * i, GaussianRational(-1));
    EXPECT_EQ(i.pow(4), GaussianRational(1));
    EXPECT_EQ(i.pow(-1), -i);
    EXPECT_EQ(binomial(mpq_class(-2), 3), mpq_class(-4));
    EXPECT_EQ(binomial(mpq_class(1, 2), 2), mpq_class(-1, 8));
    EXPECT_EQ(binomial(mpq_class(4), 5), mpq_class(0));
    EXPECT_THROW(GaussianRational().inverse(), Error);
}

TEST(ScalarExpr, RingAxiomsOnRandomValues) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        auto a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(ScalarExpr, TextRoundTrip) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 1000; ++t) {
        auto a = random_expr(rng);
        EXPECT_EQ(ScalarExpr::parse(a.str()), a) << a.str();
    }
}

TEST(ScalarExpr, CanonicalPrinting) {
    auto e = ScalarExpr::parse("(44/4+5/4 i)*pi*f^-1*df_n*Omega4*dimF - 15/16*pi*h1*Omega4*dimF");
    EXPECT_EQ(e.str(), "(11+5/4*i)*pi*f^-1*df_n*Omega4*dimF - 15/16*pi*h1*Omega4*dimF");
    EXPECT_EQ(ScalarExpr::parse("i/16*pi*f*(-f^-2*df_n)").str(), "-1/16*i*pi*f^-1*df_n");
    EXPECT_EQ(ScalarExpr::parse("2*tr(As_n)*pi - tr(A_n)").str(), "-tr(A_n) + 2*pi*tr(As_n)");
    EXPECT_EQ(ScalarExpr::parse("0").str(), "0");
}

TEST(ScalarExpr, TracesAreCyclic) {
    EXPECT_EQ(ScalarExpr::parse("tr(A_1.As_2.sig_n)"), ScalarExpr::parse("tr(sig_n.A_1.As_2)"));
    EXPECT_NE(ScalarExpr::parse("tr(A_1.As_2.sig_n)"), ScalarExpr::parse("tr(As_2.A_1.sig_n)"));
    EXPECT_EQ(ScalarExpr::trace_of({}), ScalarExpr::param(Param::DIMF));
}

TEST(ScalarExpr, FDerivatives) {
    auto finv = ScalarExpr::param(Param::F, -1);
    EXPECT_EQ(laurent_f_derivative(finv, 6), ScalarExpr::parse("-f^-2*df_n"));
    EXPECT_EQ(laurent_f_derivative(ScalarExpr::parse("3*f^2*h1"), 2), ScalarExpr::parse("6*f*df_2*h1"));
    EXPECT_THROW(laurent_f_derivative(ScalarExpr::parse("df_n"), 6), SecondDerivativeError);
}

TEST(ScalarExpr, ParseErrors) {
    EXPECT_THROW(ScalarExpr::parse("h1^-1"), ParseError);
    EXPECT_THROW(ScalarExpr::parse("tr(A_7)"), Error);
    EXPECT_EQ(ScalarExpr::parse("tr()"), ScalarExpr::param(Param::DIMF));
    EXPECT_THROW(ScalarExpr::parse("pi +"), ParseError);
    EXPECT_THROW(ScalarExpr::parse("tr(Q_1)"), ParseError);
    EXPECT_THROW(ScalarExpr::param(Param::DIMF, -1), InvariantError);
}
