#include <gtest/gtest.h>

#include "support.hpp"

using namespace hyperprime;
using namespace testsupport;

namespace {

std::vector<std::uint64_t> bits_of(const std::vector<SubsetHandle>& hs) {
    std::vector<std::uint64_t> out;
    for (const auto& h : hs) out.push_back(h.members.bits());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ModulePtr> fixture_modules() {
    std::vector<ModulePtr> out;
    for (const auto& entry : std::filesystem::directory_iterator(HYPERPRIME_FIXTURES))
        for (const auto& M : load_structure_file(entry.path()).modules) out.push_back(M);
    return out;
}

}  // namespace

TEST(Enumeration, MatchesAllSubsetsFilterOnFixtures) {
    for (const auto& M : fixture_modules()) {
        EXPECT_EQ(bits_of(enumerate_subhypermodules(*M)), naive_subhypermodules(*M)) << M->name();
        EXPECT_EQ(bits_of(enumerate_hyperideals(M->ring())), naive_hyperideals(M->ring())) << M->ring().name();
    }
}

TEST(Enumeration, ExampleLattice) {
    const auto M = module_of("fix_a.hyp", "M");
    std::vector<std::string> got;
    for (const auto& s : enumerate_subhypermodules(*M)) got.push_back(M->carrier().format(s.members));
    EXPECT_EQ(got, (std::vector<std::string>{"{0}", "{0,2}", "{0,1,2}", "{0,2,3}", "{0,1,2,3}"}));
    std::vector<std::string> ideals;
    for (const auto& s : enumerate_hyperideals(M->ring())) ideals.push_back(M->ring().carrier().format(s.members));
    EXPECT_EQ(ideals, (std::vector<std::string>{"{0}", "{0,2}", "{0,1,2}"}));
}

TEST(Enumeration, CanonicalOrderAndRoles) {
    for (const auto& M : fixture_modules()) {
        const auto subs = enumerate_subhypermodules(*M);
        ASSERT_FALSE(subs.empty());
        EXPECT_EQ(subs.front().members, M->zero_set());
        EXPECT_EQ(subs.back().members, M->all());
        EXPECT_FALSE(subs.back().proper());
        for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_TRUE(CanonicalLess{}(subs[i - 1].members, subs[i].members));
        for (const auto& s : subs) EXPECT_EQ(s.role, SubsetRole::Subhypermodule);
    }
}

TEST(Membership, RejectsEmptyAndOutOfCarrier) {
    const auto M = module_of("fix_a.hyp", "M");
    EXPECT_THROW(is_subhypermodule(*M, ElementSet()), Error);
    EXPECT_THROW(is_subhypermodule(*M, ElementSet::of({0, 7})), Error);
    EXPECT_FALSE(is_subhypermodule(*M, ElementSet::of({0, 1})));
    EXPECT_TRUE(is_subhypermodule(*M, ElementSet::of({0, 2})));
    EXPECT_THROW(as_subhypermodule(*M, ElementSet::of({0, 1})), Error);
}

TEST(Generated, PrincipalHyperideals) {
    const auto R = zmod_ring("Z4", 4);
    EXPECT_EQ(generated_hyperideal(*R, 2).members, ElementSet::of({0, 2}));
    EXPECT_EQ(generated_hyperideal(*R, 1).members, R->all());
    EXPECT_EQ(generated_hyperideal(*R, 0).members, ElementSet::single(0));
}

TEST(Colon, SetsMatchDefinitionsOnEveryFixture) {
    for (const auto& M : fixture_modules()) {
        for (const auto& s : enumerate_subhypermodules(*M)) {
            const ElementSet N = s.members;
            ElementSet SN;
            for (std::size_t r = 0; r < M->ring().size(); ++r) {
                bool in = true;
                for (std::size_t a = 0; a < M->size(); ++a) in = in && naive_single(*M, r, a).subset_of(N);
                if (in) SN.insert(r);
            }
            EXPECT_EQ(colon_SN(*M, N).members, SN);
            ElementSet meet = M->ring().all();
            for (std::size_t a = 0; a < M->size(); ++a) {
                ElementSet Na;
                for (std::size_t r = 0; r < M->ring().size(); ++r)
                    if (naive_single(*M, r, a).subset_of(N)) Na.insert(r);
                EXPECT_EQ(colon_Na(*M, N, a).members, Na);
                meet &= Na;
            }
            EXPECT_EQ(colon_of_set(*M, N, M->all()), meet);
            EXPECT_EQ(meet, SN);
        }
    }
}

TEST(Colon, ExampleValues) {
    const auto M = module_of("fix_a.hyp", "M");
    // Every scalar sends M into {0,2}; only 0 sends 1 into {0}.
    EXPECT_EQ(colon_SN(*M, ElementSet::of({0, 2})).members, ElementSet::of({0, 1, 2}));
    EXPECT_EQ(colon_Na(*M, ElementSet::single(0), 1).members, ElementSet::single(0));
    EXPECT_EQ(colon_Na(*M, ElementSet::single(0), 0).members, M->ring().all());
}

TEST(Torsion, SetsAndFaithfulness) {
    const auto M = module_of("fix_a.hyp", "M");
    EXPECT_THROW(torsion_Fm(*M, 0), Error);
    for (std::size_t a = 1; a < M->size(); ++a) EXPECT_EQ(torsion_Fm(*M, a).members, ElementSet::single(0));
    EXPECT_TRUE(is_faithful(*M));
    // Z2 over Z4: 2 kills 1.
    const auto Z2 = module_of("z4.hyp", "Z2");
    EXPECT_EQ(torsion_Fm(*Z2, 1).members, ElementSet::of({0, 2}));
    EXPECT_FALSE(is_faithful(*Z2));
    EXPECT_EQ(torsion_of_set(*Z2, Z2->all()), Z2->ring().all());
}

TEST(Maximal, KleinModuleHasThreeLines) {
    const auto H = module_of("fix_b.hyp", "H");
    const auto maxs = maximal_subhypermodules(*H);
    ASSERT_EQ(maxs.size(), 3u);
    for (const auto& m : maxs) EXPECT_EQ(m.members.size(), 2u);
}

TEST(Maximal, NoProperSubIsMaximalAboveAnother) {
    for (const auto& M : fixture_modules()) {
        const auto subs = enumerate_subhypermodules(*M);
        const auto maxs = maximal_subhypermodules(subs, M->size());
        for (const auto& m : maxs)
            for (const auto& s : subs)
                if (s.proper() && s.members != m.members) EXPECT_FALSE(m.members.subset_of(s.members));
    }
}
