#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "cyclewright/certs.hpp"
#include "cyclewright/errors.hpp"
#include "cyclewright/oracles.hpp"

using namespace cw;

TEST(Chromatic, FrozenValues) {
    EXPECT_EQ(chromatic_number_exact(brute::complete(5)), 5);
    EXPECT_EQ(chromatic_number_exact(brute::cycle(5)), 3);
    EXPECT_EQ(chromatic_number_exact(brute::cycle(6)), 2);
    EXPECT_EQ(chromatic_number_exact(Digraph(3)), 1);
    EXPECT_THROW(chromatic_number_exact(brute::cycle(30), 20), BudgetExceeded);
}

TEST(Chromatic, AgreesWithBruteForce) {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        Digraph d = brute::random_digraph(n, 0.3, rng);
        int chi = brute::chromatic(d);
        EXPECT_EQ(chromatic_number_exact(d), chi);
        Coloring c = optimal_coloring(d);
        EXPECT_TRUE(verify_coloring(d, c));
        EXPECT_EQ(c.palette_size, chi);
        EXPECT_FALSE(color_with_at_most(d, chi - 1).has_value());
        EXPECT_TRUE(color_with_at_most(d, chi).has_value());
        EXPECT_LE(greedy_clique_bound(d), chi);
    }
}

TEST(Subdivision, FrozenSmallCases) {
    EXPECT_TRUE(find_subdivision(brute::cycle(3), OrientedCycleSpec::directed(3)).found());
    EXPECT_TRUE(find_subdivision(brute::cycle(3), OrientedCycleSpec::directed(4)).absent());
    // A digon is a C(1,1).
    Digraph digon(2, {{0, 1}, {1, 0}});
    EXPECT_TRUE(find_subdivision(digon, OrientedCycleSpec::two_blocks(1, 1)).absent());
    EXPECT_TRUE(find_subdivision(digon, OrientedCycleSpec::directed(2)).found());
    Digraph c21(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_TRUE(find_subdivision(c21, OrientedCycleSpec::two_blocks(2, 1)).found());
    EXPECT_TRUE(find_subdivision(c21, OrientedCycleSpec::two_blocks(2, 2)).absent());
    EXPECT_TRUE(find_subdivision(brute::complete(4), OrientedCycleSpec::hat_c4()).found());
}

TEST(Subdivision, AgreesWithBruteForce) {
    std::mt19937_64 rng(23);
    std::vector<OrientedCycleSpec> specs = {
        OrientedCycleSpec::directed(3),       OrientedCycleSpec::directed(4),
        OrientedCycleSpec::two_blocks(1, 2),  OrientedCycleSpec::two_blocks(2, 2),
        OrientedCycleSpec::two_blocks(1, 3),  OrientedCycleSpec::two_blocks(2, 3),
        OrientedCycleSpec::hat_c4(),          OrientedCycleSpec::antidirected(3),
        OrientedCycleSpec{{{2, Dir::Forward}, {1, Dir::Backward}, {1, Dir::Forward}, {1, Dir::Backward}}},
    };
    for (int it = 0; it < 250; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        Digraph d = brute::random_digraph(n, 0.3 + 0.1 * (it % 3), rng);
        for (const auto& s : specs) {
            auto r = find_subdivision(d, s);
            ASSERT_NE(r.status, SearchStatus::Indeterminate);
            EXPECT_EQ(r.found(), brute::contains_subdivision(d, s)) << format_digraph(d) << s.name();
            if (r.found()) {
                EXPECT_TRUE(verify_subdivision(d, *r.witness));
            }
        }
    }
}

TEST(Subdivision, TinyBudgetIsIndeterminate) {
    SearchBudget b;
    b.node_limit = 3;
    auto r = find_subdivision(brute::complete(6), OrientedCycleSpec::antidirected(3), b);
    EXPECT_NE(r.status, SearchStatus::Absent);
}

TEST(Blocks, AgreesWithBruteForce) {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        Digraph d = brute::random_digraph(n, 0.3, rng);
        auto mb = min_blocks_over_cycles(d);
        int expect = brute::min_blocks(d);
        if (expect < 0)
            EXPECT_FALSE(mb.has_value()) << format_digraph(d);
        else {
            ASSERT_TRUE(mb.has_value()) << format_digraph(d);
            EXPECT_EQ(*mb, expect);
            auto c = cycle_with_at_most_blocks(d, expect);
            ASSERT_TRUE(c.has_value());
            EXPECT_EQ(count_blocks(c->dirs), c->blocks);
            EXPECT_LE(c->blocks, expect);
        }
    }
    EXPECT_EQ(*min_blocks_over_cycles(brute::cycle(5)), 1);
}

TEST(Paths, LongestAgreeWithBruteForce) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 7);
        Digraph d = brute::random_digraph(n, 0.3, rng);
        auto p = longest_dipath(d);
        EXPECT_EQ(static_cast<int>(p.size()) - 1, brute::longest_dipath_len(d));
        for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(d.has_arc(p[i], p[i + 1]));
        auto c = longest_directed_cycle(d);
        int lc = brute::longest_cycle_len(d);
        EXPECT_EQ(c ? static_cast<int>(c->size()) : 0, lc);
    }
}

TEST(Paths, TwoBlockPathsAreExact) {
    Digraph d(4, {{0, 1}, {1, 2}, {3, 2}});
    auto r = find_two_block_path(d, +1, 2, 1);
    ASSERT_EQ(r.status, SearchStatus::Found);
    EXPECT_EQ(r.path.size(), 4u);
    EXPECT_EQ(find_two_block_path(d, +1, 3, 0).status, SearchStatus::Absent);
    EXPECT_EQ(find_two_block_path(d, +1, 1, 2).status, SearchStatus::Found);
    EXPECT_EQ(find_two_block_path(d, -1, 2, 1).status, SearchStatus::Absent);
}

TEST(GallaiRoy, PaletteIsPathOrder) {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 150; ++it) {
        int n = 1 + static_cast<int>(rng() % 7);
        Digraph d = brute::random_digraph(n, 0.35, rng);
        auto g = gallai_roy(d);
        EXPECT_TRUE(verify_coloring(d, g.coloring));
        EXPECT_EQ(g.coloring.palette_size, static_cast<int>(g.dipath.size()));
        EXPECT_EQ(static_cast<int>(g.dipath.size()) - 1, brute::longest_dipath_len(d));
    }
}
