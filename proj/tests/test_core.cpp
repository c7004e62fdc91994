#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace hyperprime;
using namespace testsupport;

TEST(ElementSet, BasicOperations) {
    auto a = ElementSet::of({0, 2, 5});
    auto b = ElementSet::of({2, 3});
    EXPECT_EQ(a.size(), 3u);
    EXPECT_TRUE(a.contains(5));
    EXPECT_FALSE(a.contains(1));
    EXPECT_EQ((a & b), ElementSet::single(2));
    EXPECT_EQ((a | b), ElementSet::of({0, 2, 3, 5}));
    EXPECT_EQ((a - b), ElementSet::of({0, 5}));
    EXPECT_TRUE(ElementSet::single(2).subset_of(a));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_EQ(a.front(), 0u);
    EXPECT_EQ(ElementSet::full(4), ElementSet::of({0, 1, 2, 3}));
    EXPECT_EQ(a.elements(), (std::vector<std::size_t>{0, 2, 5}));
}

TEST(ElementSet, CanonicalOrderIsSizeThenLexicographic) {
    std::vector<ElementSet> v{ElementSet::of({1, 2}), ElementSet::of({0}), ElementSet::of({0, 3}),
                              ElementSet::of({2}), ElementSet::of({0, 1, 2})};
    std::sort(v.begin(), v.end(), CanonicalLess{});
    std::vector<ElementSet> want{ElementSet::of({0}), ElementSet::of({2}), ElementSet::of({0, 3}),
                                 ElementSet::of({1, 2}), ElementSet::of({0, 1, 2})};
    EXPECT_EQ(v, want);
}

TEST(MultisetIndexer, RanksSortedTuplesDenselyInEnumerationOrder) {
    for (std::size_t arity = 1; arity <= 4; ++arity) {
        for (std::size_t size = 1; size <= 5; ++size) {
            MultisetIndexer idx(arity, size);
            std::set<std::size_t> seen;
            std::size_t visited = 0;
            for_each_sorted_tuple(arity, size, [&](const Tuple& t) {
                ++visited;
                const auto r = idx.rank_sorted(t);
                EXPECT_LT(r, idx.count());
                EXPECT_TRUE(seen.insert(r).second);
            });
            EXPECT_EQ(visited, idx.count());
        }
    }
}

TEST(MultisetIndexer, PermutationsShareARank) {
    MultisetIndexer idx(3, 4);
    for (const auto& t : all_tuples(3, 4)) {
        Tuple s = t;
        std::sort(s.begin(), s.end());
        EXPECT_EQ(idx.rank(t), idx.rank_sorted(s));
    }
}

TEST(Tuples, ProductEnumerationVisitsEveryCombination) {
    std::vector<ElementSet> sets{ElementSet::of({0, 2}), ElementSet::of({1}), ElementSet::of({0, 1, 3})};
    std::set<Tuple> seen;
    for_each_in_product(std::span<const ElementSet>(sets), [&](const Tuple& t) { seen.insert(t); });
    EXPECT_EQ(seen.size(), 6u);
    EXPECT_TRUE(seen.count({2, 1, 3}));
}

TEST(HyperOpTable, SubsetEvaluationIsUnionOfEntries) {
    const auto R = load("fix_a.hyp").find_ring("R");
    ASSERT_TRUE(R);
    const auto& f = R->add();
    ElementSet expect;
    for (std::size_t x : {0, 1})
        for (std::size_t y : {1, 2}) expect |= f.at({x, y, 1});
    EXPECT_EQ(f.eval({ElementSet::of({0, 1}), ElementSet::of({1, 2}), ElementSet::single(1)}), expect);
    EXPECT_THROW(f.eval({ElementSet(), ElementSet::single(0), ElementSet::single(0)}), Error);
}

TEST(Format, ParsesExampleTablesVerbatim) {
    const auto file = load("fix_a.hyp");
    ASSERT_EQ(file.rings.size(), 1u);
    ASSERT_EQ(file.modules.size(), 1u);
    const auto& R = *file.rings[0];
    const auto& M = *file.modules[0];
    EXPECT_EQ(R.m(), 3u);
    EXPECT_EQ(R.n(), 3u);
    EXPECT_EQ(R.add().at({2, 1, 0}), ElementSet::of({0, 1, 2}));
    EXPECT_EQ(R.add().at({0, 2, 2}), ElementSet::of({0, 2}));
    EXPECT_EQ(R.product({1, 2, 1}), 2u);
    EXPECT_EQ(R.product({1, 1, 1}), 1u);
    EXPECT_FALSE(M.unital());
    EXPECT_EQ(M.act({1, 1}, 1), ElementSet::single(2));
    EXPECT_EQ(M.act({0, 0}, 3), ElementSet::single(0));
    EXPECT_EQ(M.act({2, 1}, 3), ElementSet::single(2));
}

TEST(Format, RejectsMalformedInput) {
    auto parse_kind = [](const std::string& text) {
        try {
            parse_structure(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::CapExceeded;  // sentinel: no error
    };
    const std::string head = "ring R arity 2 2\nelements 0 1\nzero 0\none 1\n";
    const std::string ring_tables =
        "f 0 0 = 0\nf 0 1 = 1\nf 1 1 = 0\ng 0 0 = 0\ng 0 1 = 0\ng 1 1 = 1\n";
    EXPECT_EQ(parse_kind(head + ring_tables), ErrorKind::CapExceeded);
    EXPECT_EQ(parse_kind(head + "f 0 0 = 0\nf 0 1 = 1\ng 0 0 = 0\ng 0 1 = 0\ng 1 1 = 1\n"), ErrorKind::Parse);
    EXPECT_EQ(parse_kind(head + ring_tables + "f 0 0 = 1\n"), ErrorKind::Parse);
    EXPECT_EQ(parse_kind(head + "f 0 0 = 0\nf 0 1 = 1\nf 1 1 = 0\ng 0 0 = 0\ng 0 1 = 0\ng 1 1 = 0 1\n"),
              ErrorKind::Parse);
    EXPECT_EQ(parse_kind(head + "f 0 0 = 7\n"), ErrorKind::Parse);
    EXPECT_EQ(parse_kind("ring R arity 2 2\nelements 0\nzero 0\none 0\nf 0 0 = 0\ng 0 0 = 0\n"), ErrorKind::Parse);
    EXPECT_EQ(parse_kind(head + ring_tables + "module M over S\n"), ErrorKind::Parse);
    EXPECT_EQ(parse_kind(head + ring_tables + "module M over R\nelements 0 1\nzero 0\nf 0 0 = 0\nf 0 1 = 1\n"
                                              "f 1 1 = 0\ng 0 | 0 = 0\ng 0 | 1 = 0\ng 1 | 0 = 0\n"),
              ErrorKind::Parse);
}

TEST(Format, UnlistedPermutationsInheritTheSortedEntry) {
    const auto file = parse_structure(
        "ring R arity 2 2\nelements 0 1\nzero 0\none 1\nf 0 0 = 0\nf 1 0 = 1\nf 1 1 = 0\n"
        "g 0 0 = 0\ng 1 0 = 0\ng 1 1 = 1\n");
    EXPECT_EQ(file.rings[0]->add().at({0, 1}), ElementSet::single(1));
    EXPECT_EQ(file.rings[0]->add().at({1, 0}), ElementSet::single(1));
}

TEST(Format, EveryFixtureRoundTrips) {
    for (const auto& entry : std::filesystem::directory_iterator(HYPERPRIME_FIXTURES)) {
        const auto file = load_structure_file(entry.path());
        const auto again = parse_structure(serialize(file));
        ASSERT_EQ(again.modules.size(), file.modules.size()) << entry.path();
        for (std::size_t i = 0; i < file.modules.size(); ++i)
            EXPECT_TRUE(same_module(*file.modules[i], *again.modules[i])) << entry.path();
        for (std::size_t i = 0; i < file.rings.size(); ++i)
            EXPECT_TRUE(same_ring(*file.rings[i], *again.rings[i])) << entry.path();
    }
}

TEST(Format, LabelSets) {
    const auto M = module_of("fix_a.hyp", "M");
    EXPECT_EQ(parse_label_set(M->carrier(), "0,2"), ElementSet::of({0, 2}));
    EXPECT_EQ(parse_label_set(M->carrier(), " 3 , 0 "), ElementSet::of({0, 3}));
    EXPECT_THROW(parse_label_set(M->carrier(), "0,9"), Error);
    EXPECT_THROW(parse_label_set(M->carrier(), ""), Error);
}

TEST(Builders, ZmodIsAnOrdinaryRingWithSingletonOperations) {
    const auto R = zmod_ring("Z6", 6);
    EXPECT_EQ(R->add().at({4, 5, 3}), ElementSet::single(0));
    EXPECT_EQ(R->product({2, 3, 5}), 0u);
    EXPECT_EQ(R->product({5, 5, 5}), 5u);
    EXPECT_TRUE(verify_ring_axioms(*R).ok());
}

TEST(Builders, KrasnerQuotientOfZ5ByPlusMinusOne) {
    // Classes {0}, {1,4}, {2,3}; 1 + 1 + 1 in Z5 covers 3, 1+1+4 = 6 = 1, 1+4+4 = 9 = 4.
    const auto R = zmod_by_units("K5", 5, {1, 4});
    ASSERT_EQ(R->size(), 3u);
    EXPECT_EQ(R->carrier().labels(), (std::vector<std::string>{"0", "1", "2"}));
    EXPECT_EQ(R->add().at({1, 1, 1}), ElementSet::of({1, 2}));
    EXPECT_EQ(R->product({2, 2, 1}), 1u);
    EXPECT_TRUE(verify_ring_axioms(*R).ok());
}
