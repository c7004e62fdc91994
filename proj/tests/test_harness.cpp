#include <gtest/gtest.h>

#include "support.hpp"

using namespace hyperprime;
using namespace testsupport;

namespace {

Corpus small_corpus() {
    return build_corpus({{"z4/Z4", module_of("z4.hyp", "Z4")}, {"fix_b/H", module_of("fix_b.hyp", "H")}});
}

const PropertyResult* find(const std::vector<PropertyResult>& rs, std::string_view theorem, std::string_view structure) {
    for (const auto& r : rs)
        if (r.theorem == theorem && r.structure == structure) return &r;
    return nullptr;
}

}  // namespace

TEST(Tally, StatusFollowsCounts) {
    auto none = Tally("x", "s");
    const auto skipped = std::move(none).finish();
    EXPECT_EQ(skipped.status, Status::Skipped);
    EXPECT_EQ(skipped.reason, "no instances");

    Tally vac("x", "s");
    vac.check(false, [] { return false; }, [] { return std::string("never"); });
    EXPECT_EQ(std::move(vac).finish().status, Status::Vacuous);

    Tally pass("x", "s");
    pass.check(true, [] { return true; }, [] { return std::string(); });
    pass.check(false, [] { return false; }, [] { return std::string(); });
    const auto p = std::move(pass).finish();
    EXPECT_EQ(p.status, Status::Pass);
    EXPECT_EQ(p.instances, 2u);
    EXPECT_EQ(p.nonvacuous, 1u);

    Tally fail("x", "s");
    fail.check(true, [] { return false; }, [] { return std::string("first"); });
    fail.check(true, [] { return false; }, [] { return std::string("second"); });
    fail.skip("partly");
    const auto f = std::move(fail).finish();
    EXPECT_EQ(f.status, Status::Fail);
    EXPECT_EQ(f.failures, 2u);
    EXPECT_EQ(f.witness, "first");
    EXPECT_EQ(f.reason, "partly");
}

TEST(Tally, BiconditionalCountsOnlyWhenEitherSideHolds) {
    Tally t("x", "s");
    t.biconditional(false, false, [] { return std::string(); });
    t.biconditional(true, true, [] { return std::string(); });
    t.biconditional(true, false, [] { return std::string("lhs only"); });
    const auto r = std::move(t).finish();
    EXPECT_EQ(r.instances, 3u);
    EXPECT_EQ(r.nonvacuous, 2u);
    EXPECT_EQ(r.failures, 1u);
    EXPECT_EQ(r.witness, "lhs only");
}

TEST(Catalog, IdsAreUniqueAndKnown) {
    std::set<std::string_view> ids;
    for (const auto& t : theorem_catalog()) EXPECT_TRUE(ids.insert(t.id).second) << t.id;
    EXPECT_EQ(ids.size(), 34u);
    EXPECT_TRUE(is_theorem_id("phi-by-quotient"));
    EXPECT_FALSE(is_theorem_id("phi-by-quotent"));
    EXPECT_THROW(run_harness(small_corpus(), {.theorems = {"nope"}}), Error);
}

TEST(Harness, SmallCorpusHasNoFailuresOnTransportChecks) {
    const auto corpus = small_corpus();
    const auto rs = run_harness(corpus, {.theorems = {"phi-empty-reduction", "phi-zero-reduction", "prime-forms",
                                                      "weakly-lift", "phi-by-quotient", "projection-kernel"}});
    EXPECT_FALSE(rs.empty());
    EXPECT_FALSE(any_failure(rs));
    for (const auto& r : rs) EXPECT_NE(r.status, Status::Fail) << r.theorem << " " << r.structure << " " << r.witness;
    const auto* red = find(rs, "phi-empty-reduction", "z4/Z4");
    ASSERT_TRUE(red);
    EXPECT_EQ(red->status, Status::Pass);
}

TEST(Harness, FilterRestrictsTheorems) {
    const auto rs = run_harness(small_corpus(), {.theorems = {"prime-forms"}});
    for (const auto& r : rs) EXPECT_EQ(r.theorem, "prime-forms");
    const auto summary = summarize(rs);
    std::size_t counted = 0;
    for (const auto& s : summary) counted += s.pass + s.vacuous + s.fail + s.skipped;
    EXPECT_EQ(counted, rs.size());
}

TEST(Harness, BrokenClassifierIsCaught) {
    // A classical test that accepts everything breaks the reduction to phi_empty.
    HarnessOptions opts{.theorems = {"phi-empty-reduction"}};
    opts.classifiers.classical = [](const Hypermodule&, ElementSet) { return true; };
    const auto rs = run_harness(small_corpus(), opts);
    ASSERT_TRUE(any_failure(rs));
    for (const auto& r : rs) {
        if (r.status == Status::Fail) {
            EXPECT_FALSE(r.witness.empty());
        }
    }
}

TEST(Harness, BrokenWeaklyClassifierIsCaught) {
    HarnessOptions opts{.theorems = {"phi-zero-reduction"}};
    opts.classifiers.weakly = [](const Hypermodule&, ElementSet) { return false; };
    EXPECT_TRUE(any_failure(run_harness(small_corpus(), opts)));
}

TEST(Harness, DeterministicOrder) {
    const auto corpus = small_corpus();
    const auto a = run_harness(corpus, {.theorems = {"weakly-colon-cover", "phi-colon-cover"}});
    const auto b = run_harness(corpus, {.theorems = {"weakly-colon-cover", "phi-colon-cover"}});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].theorem, b[i].theorem);
        EXPECT_EQ(a[i].structure, b[i].structure);
        EXPECT_EQ(a[i].status, b[i].status);
        EXPECT_EQ(a[i].instances, b[i].instances);
    }
}

TEST(Harness, PatternHolds) {
    detail::ImagePattern p;
    p.joint = ElementSet::of({0, 2});
    p.singles = {ElementSet::of({1}), ElementSet::of({0, 2})};
    EXPECT_TRUE(pattern_holds(p, ElementSet::of({0, 2}), ElementSet()));
    p.singles = {ElementSet::of({1})};
    EXPECT_FALSE(pattern_holds(p, ElementSet::of({0, 2}), ElementSet()));
    // Excluded elements remove the premise.
    EXPECT_TRUE(pattern_holds(p, ElementSet::of({0, 2}), ElementSet::single(0)));
}
