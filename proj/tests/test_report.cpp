#include <gtest/gtest.h>

#include <json.hpp>

#include "ncres/errors.hpp"
#include "ncres/report.hpp"

using namespace ncres;

namespace {

RunConfig small_config() {
    RunConfig c;
    c.families = {Family::Dirac};
    c.cases = {"aII", "aIII"};
    c.oracle = false;
    return c;
}

}  // namespace

TEST(Fixtures, LoadAll) {
    auto fx = load_fixtures(data_path("fixtures.json"));
    EXPECT_EQ(fx.size(), 27u);
    EXPECT_TRUE(std::is_sorted(fx.begin(), fx.end(), [](auto& a, auto& b) { return a.id < b.id; }));
    for (auto& f : fx) {
        EXPECT_FALSE(f.citation.empty()) << f.id;
        EXPECT_EQ(ScalarExpr::parse(f.expr_text), f.expr) << f.id;
    }
}

TEST(Fixtures, MissingFileThrows) {
    EXPECT_THROW(load_fixtures("/nonexistent/fixtures.json"), Error);
}

TEST(Report, JsonRoundTripAndSchema) {
    auto text = render_json(run(small_config()));
    auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j.dump(2) + "\n", text);
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_EQ(j["engine_version"], engine_version());
    EXPECT_FALSE(j.contains("timing"));
}

TEST(Report, ByteIdenticalRuns) {
    auto a = small_config();
    auto b = small_config();
    b.jobs = 3;
    EXPECT_EQ(render_json(run(a)), render_json(run(b)));
}

TEST(Report, PartialRunIsIncomplete) {
    auto r = run(small_config());
    ASSERT_EQ(r.families.size(), 1u);
    EXPECT_FALSE(r.families[0].complete);
    EXPECT_TRUE(r.ok());
}

TEST(Report, LedgerClassifiesKnownDifference) {
    auto c = small_config();
    c.cases = {"aII"};
    c.oracle = true;
    auto r = run(c);
    auto* e = r.diff.entry("dirac.aII.f");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->classification, "paper-side discrepancy");
    ASSERT_TRUE(e->oracle.has_value());
    EXPECT_TRUE(e->oracle->engine_confirmed);
    EXPECT_TRUE(e->oracle->fixture_rejected);
    EXPECT_EQ(r.diff.outcome("dirac.aII.h1")->status, "match");
}

TEST(Report, TheoremBlockLabelsInterior) {
    RunConfig c;
    c.families = {Family::Dirac};
    c.oracle = false;
    auto r = run(c);
    auto text = render_theorem(r.families[0]);
    EXPECT_NE(text.find("unverified (out of scope"), std::string::npos);
    EXPECT_NE(text.find("h'(0)"), std::string::npos);
    auto md = render_markdown(r);
    EXPECT_NE(md.find("dirac.aII.f"), std::string::npos);
}

TEST(Report, FamilySelection) {
    EXPECT_EQ(parse_family_selection("both").size(), 2u);
    EXPECT_EQ(parse_family_selection("signature"), std::vector<Family>{Family::Signature});
    EXPECT_THROW(parse_family_selection("nope"), Error);
}
