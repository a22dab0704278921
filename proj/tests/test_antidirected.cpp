#include <gtest/gtest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "cyclewright/antidirected.hpp"
#include "cyclewright/certs.hpp"

using namespace cw;

namespace {

Digraph tournament(int n, std::mt19937_64& rng) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) arcs.push_back(rng() % 2 ? Arc{u, v} : Arc{v, u});
    return Digraph(n, arcs);
}

Digraph oriented_random(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) arcs.push_back(rng() % 2 ? Arc{u, v} : Arc{v, u});
    return Digraph(n, arcs);
}

Digraph complete_bipartite(int a, int b) {
    std::vector<Arc> arcs;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) arcs.push_back({u, a + v});
    return Digraph(a + b, arcs);
}

BipartiteCut cut_of(const Digraph& d, int a) {
    BipartiteCut c;
    for (int v = 0; v < d.order(); ++v) (v < a ? c.a : c.b).push_back(v);
    for (const Arc& e : d.arcs())
        if (e.first < a && e.second >= a) c.forward_arcs.push_back(e);
    return c;
}

/// Checks independently: distinct vertices, consecutive ones adjacent,
/// directions alternate around the cycle.
bool is_antidirected_cycle(const Digraph& d, const std::vector<int>& cyc) {
    const int m = static_cast<int>(cyc.size());
    if (m < 4 || m % 2) return false;
    if (std::set<int>(cyc.begin(), cyc.end()).size() != cyc.size()) return false;
    for (int i = 0; i < m; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % m];
        bool fwd = i % 2 == 0;
        if (!(fwd ? d.has_arc(u, v) : d.has_arc(v, u))) return false;
    }
    return true;
}

int min_degree(const Digraph& d) {
    int best = 1 << 30;
    for (int v = 0; v < d.order(); ++v) best = std::min(best, d.degree(v));
    return best;
}

void check_witness(const Digraph& d, const SubdivisionWitness& w, int k) {
    EXPECT_TRUE(verify_subdivision(d, w));
    EXPECT_GE(static_cast<int>(w.branch.size()), 2 * k);
    for (const auto& p : w.paths) EXPECT_EQ(p.size(), 2u);
    EXPECT_TRUE(is_antidirected_cycle(d, w.branch));
}

}  // namespace

TEST(Peel, Examples) {
    EXPECT_EQ(peel_to_min_degree(brute::complete(5), 4).graph.order(), 5);
    Digraph tree(5, {{0, 1}, {2, 1}, {1, 3}, {4, 3}});
    EXPECT_EQ(peel_to_min_degree(tree, 2).graph.order(), 0);
    Digraph k4p(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    auto s = peel_to_min_degree(k4p, 3);
    EXPECT_EQ(s.to_parent, (std::vector<int>{0, 1, 2, 3}));
}

TEST(Peel, MaximalAgainstBruteForce) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const int n = 4 + t % 6;
        Digraph d = oriented_random(n, 0.5, rng);
        const int md = 1 + t % 3;
        // Largest vertex subset whose induced graph has min degree >= md.
        int best = 0;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> vs;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) vs.push_back(v);
            if (static_cast<int>(vs.size()) <= best) continue;
            if (min_degree(induced_subdigraph(d, vs).graph) >= md) best = static_cast<int>(vs.size());
        }
        auto s = peel_to_min_degree(d, md);
        EXPECT_EQ(s.graph.order(), best);
        if (s.graph.order()) {
            EXPECT_GE(min_degree(s.graph), md);
        }
    }
}

TEST(QuarterCut, Examples) {
    auto c = quarter_directed_cut(Digraph(2, {{0, 1}}));
    EXPECT_EQ(c.a, std::vector<int>{0});
    EXPECT_EQ(c.b, std::vector<int>{1});
    EXPECT_EQ(c.forward_arcs.size(), 1u);
    EXPECT_GE(quarter_directed_cut(brute::cycle(4)).forward_arcs.size(), 2u);
    std::mt19937_64 rng(5);
    EXPECT_GE(quarter_directed_cut(tournament(9, rng)).forward_arcs.size(), 9u);
}

TEST(QuarterCut, GuaranteeOnRandomDigraphs) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        Digraph d = brute::random_digraph(2 + t % 30, 0.05 + (t % 10) * 0.08, rng);
        if (d.size() == 0) continue;
        auto c = quarter_directed_cut(d);
        EXPECT_GE(4 * c.forward_arcs.size(), d.size());
        std::vector<int> side(d.order(), -1);
        for (int v : c.a) side[v] = 0;
        for (int v : c.b) {
            EXPECT_EQ(side[v], -1);
            side[v] = 1;
        }
        for (int s : side) EXPECT_NE(s, -1);
        for (auto [u, v] : c.forward_arcs) {
            EXPECT_EQ(side[u], 0);
            EXPECT_EQ(side[v], 1);
            EXPECT_TRUE(d.has_arc(u, v));
        }
    }
}

TEST(DenseCore, Examples) {
    auto core = dense_bipartite_subgraph(cut_of(complete_bipartite(3, 3), 3), 2);
    EXPECT_EQ(core.arcs.size(), 9u);
    EXPECT_THROW(dense_bipartite_subgraph(cut_of(Digraph(2, {{0, 1}}), 1), 1), Degenerate);

    // K_{4,4} on 0..3 -> 4..7 plus pendant arcs to 8..11 and from 12, 13.
    std::vector<Arc> arcs;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) arcs.push_back({u, v});
    for (int i = 0; i < 4; ++i) arcs.push_back({i, 8 + i});
    arcs.push_back({12, 4});
    arcs.push_back({13, 5});
    BipartiteCut c;
    c.a = {0, 1, 2, 3, 12, 13};
    c.b = {4, 5, 6, 7, 8, 9, 10, 11};
    c.forward_arcs = arcs;
    auto k = dense_bipartite_subgraph(c, 3);
    EXPECT_EQ(k.a, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(k.b, (std::vector<int>{4, 5, 6, 7}));
    EXPECT_EQ(k.arcs.size(), 16u);
}

TEST(LongCycle, Examples) {
    EXPECT_EQ(long_cycle_bipartite(complete_bipartite(3, 3), 3).size(), 6u);
    EXPECT_EQ(long_cycle_bipartite(brute::cycle(4), 2).size(), 4u);
    EXPECT_GE(long_cycle_bipartite(complete_bipartite(4, 5), 4).size(), 8u);
    EXPECT_THROW(long_cycle_bipartite(Digraph(3, {{0, 1}, {1, 2}}), 2), PreconditionError);
}

TEST(LongCycle, LengthAtLeastTwiceMinDegree) {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
        const int a = 3 + t % 5, b = 3 + (t / 5) % 5;
        std::bernoulli_distribution coin(0.7);
        std::vector<Arc> arcs;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (coin(rng)) arcs.push_back({u, a + v});
        BipartiteCut c = cut_of(Digraph(a + b, arcs), a);
        if (c.forward_arcs.empty()) continue;
        BipartiteCore core;
        try {
            core = dense_bipartite_subgraph(c, 1);
        } catch (const Degenerate&) {
            continue;
        }
        Digraph g(a + b, core.arcs);
        int md = 1 << 30;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v)) md = std::min(md, g.degree(v));
        auto cyc = long_cycle_bipartite(g, md);
        EXPECT_GE(static_cast<int>(cyc.size()), 2 * md);
        const int m = static_cast<int>(cyc.size());
        EXPECT_EQ(std::set<int>(cyc.begin(), cyc.end()).size(), cyc.size());
        for (int i = 0; i < m; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % m];
            EXPECT_TRUE(g.has_arc(u, v) || g.has_arc(v, u));
        }
        ++checked;
    }
    EXPECT_GT(checked, 200);
}

TEST(FindAntidirected, Examples) {
    std::mt19937_64 rng(9);
    Digraph t9 = tournament(9, rng);
    check_witness(t9, find_antidirected(t9, 2), 2);
    Digraph t17 = tournament(17, rng);
    check_witness(t17, find_antidirected(t17, 3), 3);
    EXPECT_THROW(find_antidirected(brute::cycle(5), 2), PreconditionError);
    EXPECT_THROW(find_antidirected(brute::complete(9), 2), PreconditionError);
    EXPECT_THROW(find_antidirected(t9, 1), InfeasibleParameters);
}

TEST(FindAntidirected, PipelineChainOnRandomInputs) {
    std::mt19937_64 rng(31);
    int found = 0;
    for (int t = 0; t < 150; ++t) {
        const int k = 2 + t % 2;
        const int n = 8 * k - 7 + static_cast<int>(rng() % 12);
        Digraph d = t % 3 == 0 ? tournament(n, rng) : oriented_random(n, 0.85, rng);
        auto peel = peel_to_min_degree(d, 8 * k - 8);
        if (peel.graph.order() == 0) {
            EXPECT_THROW(find_antidirected(d, k), PreconditionError);
            continue;
        }
        const int v = peel.graph.order();
        EXPECT_GE(min_degree(peel.graph), 8 * k - 8);
        EXPECT_GE(static_cast<int>(peel.graph.size()), (4 * k - 4) * v);
        auto cut = quarter_directed_cut(peel.graph);
        EXPECT_GE(static_cast<int>(cut.forward_arcs.size()), (k - 1) * v);
        auto core = dense_bipartite_subgraph(cut, k - 1);
        Digraph g(v, core.arcs);
        for (int x = 0; x < v; ++x)
            if (g.degree(x)) {
                EXPECT_GE(g.degree(x), k);
            }
        check_witness(d, find_antidirected(d, k), k);
        ++found;
    }
    EXPECT_GT(found, 50);
}
