#include <gtest/gtest.h>

#include "support.hpp"

using namespace hyperprime;
using namespace testsupport;

namespace {

struct Case {
    ModulePtr M;
    ElementSet Q;
};

/// Every proper subhypermodule of every fixture module plus a few built modules.
std::vector<Case> proper_cases() {
    std::vector<ModulePtr> mods;
    for (const auto& entry : std::filesystem::directory_iterator(HYPERPRIME_FIXTURES))
        for (const auto& M : load_structure_file(entry.path()).modules) mods.push_back(M);
    const auto Z8 = zmod_ring("Z8", 8);
    mods.push_back(zmod_module("Z8", Z8, 8));
    const auto Z6 = zmod_ring("Z6", 6);
    mods.push_back(zmod_module("Z6", Z6, 6));
    std::vector<Case> out;
    for (const auto& M : mods)
        for (const auto& s : enumerate_subhypermodules(*M))
            if (s.proper()) out.push_back({M, s.members});
    return out;
}

}  // namespace

TEST(Classify, ExampleSubmoduleIsClassicalPrime) {
    const auto M = module_of("fix_a.hyp", "M");
    const auto Q = ElementSet::of({0, 2});
    EXPECT_TRUE(is_classical_prime(*M, Q));
    EXPECT_TRUE(is_weakly_classical_prime(*M, Q));
}

TEST(Classify, ImproperOrNonSubIsRejected) {
    const auto M = module_of("fix_a.hyp", "M");
    try {
        classical_prime(*M, M->all());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotProper);
        EXPECT_STREQ(e.what(), "subhypermodule must be proper");
    }
    try {
        weakly_classical_prime(*M, ElementSet::of({0, 1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSub);
    }
}

TEST(Classify, AgreesWithUnsortedBruteForce) {
    for (const auto& [M, Q] : proper_cases()) {
        EXPECT_EQ(is_classical_prime(*M, Q), naive_classical_like(*M, Q, ElementSet(), false)) << M->name();
        EXPECT_EQ(is_weakly_classical_prime(*M, Q), naive_classical_like(*M, Q, ElementSet(), true)) << M->name();
        EXPECT_EQ(is_prime(*M, Q), naive_prime(*M, Q)) << M->name();
        for (const auto& phi : phi_registry())
            EXPECT_EQ(is_phi_classical_prime(*M, Q, phi), naive_classical_like(*M, Q, phi(*M, Q), false))
                << M->name() << " " << phi.name;
    }
}

TEST(Classify, WitnessViolatesTheDefinition) {
    for (const auto& [M, Q] : proper_cases()) {
        const auto v = classical_prime(*M, Q);
        if (v.holds) continue;
        ASSERT_TRUE(v.witness);
        const auto& w = *v.witness;
        EXPECT_TRUE(M->act(w.scalars, w.element).subset_of(Q));
        for (auto r : w.scalars) EXPECT_FALSE(naive_single(*M, r, w.element).subset_of(Q));
    }
}

TEST(Classify, ZmodSubmodules) {
    // In Z8 over Z8, (4) is not classical: 2*2*1 = 4 but 2*1*1 = 2 is outside.
    const auto R = zmod_ring("Z8", 8);
    const auto M = zmod_module("Z8", R, 8);
    EXPECT_FALSE(is_classical_prime(*M, ElementSet::of({0, 4})));
    EXPECT_TRUE(is_classical_prime(*M, ElementSet::of({0, 2, 4, 6})));
    // {0} is weakly classical vacuously: every product landing in {0} contains 0.
    EXPECT_TRUE(is_weakly_classical_prime(*M, ElementSet::single(0)));
    EXPECT_FALSE(is_classical_prime(*M, ElementSet::single(0)));
}

TEST(Classify, PhiRegistryValues) {
    const auto M = module_of("fix_a.hyp", "M");
    const auto Q = ElementSet::of({0, 2});
    EXPECT_EQ(phi_empty()(*M, Q), ElementSet());
    EXPECT_EQ(phi_zero()(*M, Q), ElementSet::single(0));
    EXPECT_EQ(phi_id()(*M, Q), Q);
    // S_Q = R and g(R, 1, Q) = {0,2}.
    EXPECT_EQ(phi_ideal()(*M, Q), Q);
    EXPECT_EQ(phi_by_name("ideal").name, "ideal");
    EXPECT_THROW(phi_by_name("nope"), Error);
}

TEST(Classify, PhiIdentityIsAlwaysSatisfied) {
    for (const auto& [M, Q] : proper_cases()) EXPECT_TRUE(is_phi_classical_prime(*M, Q, phi_id()));
}

TEST(Classify, PhiReducesToClassicalAndWeakly) {
    for (const auto& [M, Q] : proper_cases()) {
        EXPECT_EQ(is_phi_classical_prime(*M, Q, phi_empty()), is_classical_prime(*M, Q));
        EXPECT_EQ(is_phi_classical_prime(*M, Q, phi_zero()), is_weakly_classical_prime(*M, Q));
    }
}

TEST(Classify, LargerPhiWeakensThePremise) {
    for (const auto& [M, Q] : proper_cases()) {
        const auto subs = enumerate_subhypermodules(*M);
        for (const auto& a : subs)
            for (const auto& b : subs) {
                if (!a.members.subset_of(b.members)) continue;
                if (phi_classical_prime_given(*M, Q, a.members).holds)
                    EXPECT_TRUE(phi_classical_prime_given(*M, Q, b.members).holds);
            }
    }
}

TEST(Classify, ImplicationChain) {
    for (const auto& [M, Q] : proper_cases()) {
        if (!is_classical_prime(*M, Q)) continue;
        EXPECT_TRUE(is_weakly_classical_prime(*M, Q));
        for (const auto& phi : phi_registry()) EXPECT_TRUE(is_phi_classical_prime(*M, Q, phi));
    }
}

TEST(Classify, PrimeFormsAgree) {
    for (const auto& [M, Q] : proper_cases()) {
        const auto v = prime(*M, Q);
        EXPECT_EQ(v.holds, prime_by_colon(*M, Q).holds);
        EXPECT_TRUE(v.diagnostic.empty());
    }
}

TEST(ClassicalZeros, BruteForceOverSubsets) {
    for (const auto& [M, Q] : proper_cases()) {
        if (M->size() > 8) continue;
        const auto found = find_classical_zeros(*M, Q);
        std::size_t expect = 0;
        for_each_sorted_tuple(M->n() - 1, M->ring().size(), [&](const Tuple& r) {
            for (std::uint64_t X = 1; X < (std::uint64_t{1} << M->size()); ++X) {
                ElementSet img;
                for (auto x : members(X, M->size())) img |= M->act(r, x);
                if (!img.contains(M->zero()) || !img.subset_of(Q)) continue;
                bool escapes = true;
                for (auto ri : r) {
                    ElementSet single;
                    for (auto x : members(X, M->size())) single |= naive_single(*M, ri, x);
                    if (single.subset_of(Q)) escapes = false;
                }
                if (escapes) ++expect;
            }
        });
        EXPECT_EQ(found.witnesses.size(), expect) << M->name();
    }
}

TEST(ClassicalZeros, ZeroWithinPExistsIffPItselfIsOne) {
    // Given g(r, P) within Q, the conditions only grow with X, so P is the only candidate worth testing.
    for (const auto& [M, Q] : proper_cases()) {
        if (M->m() != 3 || M->n() != 3 || M->size() > 8) continue;
        const auto subs = enumerate_subhypermodules(*M);
        for_each_sorted_tuple(2, M->ring().size(), [&](const Tuple& r) {
            for (const auto& P : subs) {
                const std::vector<ElementSet> rs{ElementSet::single(r[0]), ElementSet::single(r[1])};
                if (!M->act_sets(rs, P.members).subset_of(Q)) continue;
                bool any = false;
                for (std::uint64_t X = 1; X < (std::uint64_t{1} << M->size()); ++X)
                    if ((X & ~P.members.bits()) == 0 && is_classical_zero(*M, Q, r, ElementSet::from_bits(X)))
                        any = true;
                EXPECT_EQ(any, is_classical_zero(*M, Q, r, P.members)) << M->name();
            }
        });
    }
}

TEST(ClassicalZeros, CapAndPremiseErrors) {
    const auto M = module_of("fix_b.hyp", "H");
    EXPECT_THROW(find_classical_zeros(*M, M->zero_set(), 2), Error);
    const std::vector<ElementSet> ideals{M->ring().all(), M->ring().all()};
    try {
        is_free_classical_zero(*M, M->zero_set(), ideals, M->all());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PremiseFails);
    }
    EXPECT_TRUE(is_free_classical_zero(*M, M->zero_set(), ideals, M->zero_set()));
}

TEST(Torsion, StrictAndLooseReadings) {
    const auto M = module_of("z4.hyp", "Z4");
    // 2 * 2 * 1 = 0 in Z4.
    EXPECT_FALSE(is_torsion_free(*M, true));
    EXPECT_FALSE(is_torsion_free(*M, false));
    const auto K = module_of("krasner.hyp", "K");
    EXPECT_TRUE(is_torsion_free(*K, true));
    EXPECT_TRUE(is_torsion_free(*K, false));
}

TEST(Multiplication, PresentationIdeals) {
    const auto M = module_of("z4.hyp", "Z4");
    EXPECT_TRUE(is_multiplication_module(*M));
    const auto H = module_of("fix_b.hyp", "H");
    // Each line {0,x} has S = {0}, which only presents {0}.
    EXPECT_FALSE(is_multiplication_module(*H));
    EXPECT_EQ(presentation_ideal(*M, ElementSet::of({0, 2})).members, ElementSet::of({0, 2}));
    EXPECT_EQ(submodule_product(*M, {ElementSet::of({0, 2}), ElementSet::of({0, 2}), M->all()}), ElementSet::single(0));
    EXPECT_EQ(submodule_product(*M, {ElementSet::of({0, 2}), M->all()}, 1), ElementSet::of({0, 2}));
    EXPECT_THROW(submodule_product(*H, {H->all(), H->all(), H->all()}), Error);
}
