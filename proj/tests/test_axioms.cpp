#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace hyperprime;
using namespace testsupport;

namespace {

// Unsorted-tuple checks of the m-ary hypergroup laws, straight from the tables.

bool naive_associative(const HyperOpTable& f, std::size_t m, std::size_t size) {
    for (const auto& x : all_tuples(2 * m - 1, size)) {
        std::optional<ElementSet> first;
        for (std::size_t i = 0; i < m; ++i) {
            // f(x_0..x_{i-1}, f(x_i..x_{i+m-1}), x_{i+m}..)
            Tuple inner(x.begin() + i, x.begin() + i + m);
            ElementSet out;
            for (auto y : f.at(inner)) {
                Tuple outer(x.begin(), x.begin() + i);
                outer.push_back(y);
                outer.insert(outer.end(), x.begin() + i + m, x.end());
                out |= f.at(outer);
            }
            if (!first)
                first = out;
            else if (*first != out)
                return false;
        }
    }
    return true;
}

bool naive_unique_inverses(const HyperOpTable& f, std::size_t m, std::size_t zero, std::size_t size) {
    for (std::size_t x = 0; x < size; ++x) {
        std::size_t count = 0;
        for (std::size_t y = 0; y < size; ++y) {
            Tuple t(m, zero);
            t[0] = x;
            t[1] = y;
            if (f.at(t).contains(zero)) ++count;
        }
        if (count != 1) return false;
    }
    return true;
}

ModulePtr with_ring(const StructureFile& f) { return f.modules.front(); }

}  // namespace

TEST(RingAxioms, OracleAgreesOnEveryFixtureRing) {
    for (const auto& entry : std::filesystem::directory_iterator(HYPERPRIME_FIXTURES)) {
        for (const auto& R : load_structure_file(entry.path()).rings) {
            const auto rep = verify_ring_axioms(*R);
            EXPECT_EQ(rep.find("add.associativity")->pass(), naive_associative(R->add(), R->m(), R->size()))
                << R->name();
            EXPECT_EQ(rep.find("add.inverse")->pass(), naive_unique_inverses(R->add(), R->m(), R->zero(), R->size()))
                << R->name();
            EXPECT_EQ(rep.find("mul.associativity")->pass(), naive_associative(R->mul(), R->n(), R->size()))
                << R->name();
        }
    }
}

TEST(RingAxioms, ExampleRingDefects) {
    // f'(f'(0,0,1),1,1) = {1} but f'(0,f'(0,1,1),1) = {0,1}; 1 and 2 are each inverse to 1.
    const auto R = load("fix_a.hyp").find_ring("R");
    const auto rep = verify_ring_axioms(*R);
    EXPECT_EQ(rep.groups().size(), 5u);
    EXPECT_EQ(rep.groups_passing(), 4u);
    EXPECT_FALSE(rep.group_passes("hypergroup"));
    EXPECT_FALSE(rep.find("add.associativity")->pass());
    EXPECT_FALSE(rep.find("add.inverse")->pass());
    EXPECT_FALSE(rep.find("add.reversibility")->pass());
    EXPECT_TRUE(rep.find("add.neutral")->pass());
    for (const char* id : {"mul.associativity", "mul.distributivity", "mul.zero", "mul.identity"})
        EXPECT_TRUE(rep.find(id)->pass()) << id;
    EXPECT_EQ(summary_line(rep), "ring R: 4/5 axiom groups pass");
}

TEST(RingAxioms, WitnessReplaysByHand) {
    const auto R = load("fix_a.hyp").find_ring("R");
    const auto rep = verify_ring_axioms(*R);
    const auto* assoc = rep.find("add.associativity");
    ASSERT_EQ(assoc->witness.size(), 5u);
    const auto& x = assoc->witness;
    const auto& f = R->add();
    std::set<std::uint64_t> groupings;
    for (std::size_t i = 0; i < 3; ++i) {
        ElementSet out;
        for (auto y : f.at({x[i], x[i + 1], x[i + 2]})) {
            Tuple outer(x.begin(), x.begin() + i);
            outer.push_back(y);
            outer.insert(outer.end(), x.begin() + i + 3, x.end());
            out |= f.at(outer);
        }
        groupings.insert(out.bits());
    }
    EXPECT_GT(groupings.size(), 1u);
}

TEST(RingAxioms, MutatedEntryIsCaught) {
    // f'(0,0,2) := {1} breaks the neutral element at 2.
    auto text = slurp(fixture("fix_a.hyp"));
    const auto pos = text.find("f 0 0 2 = 2");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 11, "f 0 0 2 = 1");
    const auto R = parse_structure(text).find_ring("R");
    const auto rep = verify_ring_axioms(*R);
    const auto* neutral = rep.find("add.neutral");
    EXPECT_FALSE(neutral->pass());
    EXPECT_FALSE(neutral->detail.empty());
    EXPECT_GT(rep.failure_count(), verify_ring_axioms(*load("fix_a.hyp").find_ring("R")).failure_count());
}

TEST(RingAxioms, ClassicalRingsPass) {
    for (std::size_t k : {2, 3, 4, 6})
        for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}, std::pair{2, 4}}) {
            const auto rep = verify_ring_axioms(*zmod_ring("Z", k, m, n));
            EXPECT_TRUE(rep.ok()) << k << " " << m << " " << n;
        }
}

TEST(ModuleAxioms, ExampleModuleKeepsActionLawsAndIsNotUnital) {
    const auto M = module_of("fix_a.hyp", "M");
    const auto rep = verify_module_axioms(*M, {.require_valid_ring = false});
    for (const char* id : {"module.action-sum", "module.scalar-sum", "module.scalar-product", "module.zero-scalar"})
        EXPECT_TRUE(rep.find(id)->pass()) << id;
    EXPECT_EQ(rep.find("module.unital"), nullptr);
    EXPECT_FALSE(rep.find("add.associativity")->pass());
    // g(1,1,a) = {2} for a in {1,3}, so 1 is not a scalar identity.
    EXPECT_EQ(M->act({1, 1}, 1), ElementSet::single(2));
}

TEST(ModuleAxioms, RingMustVerifyWhenRequested) {
    const auto M = module_of("fix_a.hyp", "M");
    try {
        verify_module_axioms(*M);
        FAIL() << "expected RingInvalid";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RingInvalid);
    }
}

TEST(ModuleAxioms, MutatedActionIsCaught) {
    // g(1,2,a=1) := {1}: scalar product with g'(1,2,1) = 2 no longer matches.
    auto text = slurp(fixture("fix_a.hyp"));
    const auto pos = text.find("g 1 2 | 1 = 2");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 13, "g 1 2 | 1 = 1");
    const auto M = with_ring(parse_structure(text));
    const auto rep = verify_module_axioms(*M, {.require_valid_ring = false});
    EXPECT_FALSE(rep.ok());
    std::size_t action_failures = 0;
    for (const auto& r : rep.results)
        if (r.id.rfind("module.", 0) == 0 && !r.pass()) {
            ++action_failures;
            EXPECT_FALSE(r.detail.empty());
        }
    EXPECT_GT(action_failures, 0u);
}

TEST(ModuleAxioms, CorpusModulesPass) {
    for (const char* file : {"fix_b.hyp", "z2.hyp", "z4.hyp", "z2xz2.hyp", "krasner.hyp", "z5pm.hyp"}) {
        for (const auto& M : load(file).modules) {
            const auto [ring_rep, mod_rep] = verify_all(*M);
            EXPECT_TRUE(ring_rep.ok()) << file;
            EXPECT_TRUE(mod_rep.ok()) << file << " " << M->name();
            EXPECT_TRUE(mod_rep.find("module.unital")->pass());
        }
    }
    EXPECT_EQ(summary_line(verify_module_axioms(*module_of("fix_b.hyp", "H")), true), "module H: pass (unital=true)");
}

TEST(ModuleAxioms, ZeroFailuresIffReportOk) {
    for (const auto& entry : std::filesystem::directory_iterator(HYPERPRIME_FIXTURES))
        for (const auto& M : load_structure_file(entry.path()).modules) {
            const auto rep = verify_module_axioms(*M, {.require_valid_ring = false});
            EXPECT_EQ(rep.ok(), rep.failure_count() == 0);
        }
}
