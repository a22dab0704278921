#include <gtest/gtest.h>

#include <algorithm>
#include <iostream>
#include <map>
#include <random>

#include "brute.hpp"
#include "cyclewright/certs.hpp"
#include "cyclewright/hamiltonian.hpp"
#include "cyclewright/oracles.hpp"

using namespace cw;

namespace {

std::vector<int> iota(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

ChordedCycle with_chords(int n, std::vector<Arc> chords) {
    for (int i = 0; i < n; ++i) chords.emplace_back(i, (i + 1) % n);
    std::sort(chords.begin(), chords.end());
    chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
    return ChordedCycle(Digraph(n, chords), iota(n));
}

/// Cycle 0..n-1 plus each other arc with probability p, then relabelled.
ChordedCycle random_chorded(int n, double p, std::mt19937_64& rng, int max_forward = 0) {
    std::bernoulli_distribution coin(p);
    std::vector<Arc> a;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const int f = ((v - u) % n + n) % n;
            if (f == 0) continue;
            if (f == 1 || (coin(rng) && (max_forward == 0 || f <= max_forward))) a.emplace_back(u, v);
        }
    std::vector<int> perm = iota(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph d = brute::permuted(Digraph(n, a), perm);
    return ChordedCycle(d, perm);
}

int palette(const Coloring& c) { return *std::max_element(c.color.begin(), c.color.end()) + 1; }

}  // namespace

TEST(ChordedCycle, Validation) {
    EXPECT_THROW(ChordedCycle(brute::cycle(5), {0, 1, 2, 4, 3}), PreconditionError);
    EXPECT_THROW(ChordedCycle(brute::cycle(5), {0, 1, 2, 3}), PreconditionError);
    EXPECT_THROW(ChordedCycle(brute::cycle(5), {0, 1, 2, 3, 3}), PreconditionError);
    auto cc = with_chords(8, {{0, 3}, {6, 1}});
    EXPECT_EQ(cc.chords().size(), 2u);
    EXPECT_EQ(cc.span({0, 3}), 3);
    EXPECT_EQ(cc.span({6, 1}), 3);
    EXPECT_EQ(cc.cycle_distance(5, 1), 4);
    EXPECT_EQ(cc.max_span(), 3);
    EXPECT_EQ(cc.forward(5, 1), 4);
    EXPECT_EQ(cc.segment(6, 1), (std::vector<int>{6, 7, 0, 1}));
}

TEST(SpanColoring, Examples) {
    auto c8 = with_chords(8, {{0, 3}});
    Coloring c = span_coloring(c8);
    EXPECT_TRUE(verify_coloring(c8.digraph(), c));
    EXPECT_LE(palette(c), 5);
    // The chord joins two vertices at distance exactly 3, so the block formula
    // gives them the same colour.
    EXPECT_STREQ(last_span_route(), "exact");

    EXPECT_THROW(span_coloring(with_chords(6, {})), PreconditionError);

    std::vector<Arc> span2;
    for (int i = 0; i < 10; i += 2) span2.emplace_back(i, (i + 2) % 10);
    auto c10 = with_chords(10, span2);
    Coloring d = span_coloring(c10);
    EXPECT_TRUE(verify_coloring(c10.digraph(), d));
    EXPECT_LE(palette(d), 3);
}

TEST(SpanColoring, CompleteFiveViolatesTheBound) {
    // Span 2 everywhere but chromatic number 5.
    ChordedCycle k5(brute::complete(5), iota(5));
    try {
        span_coloring(k5);
        FAIL() << "expected a LemmaViolation";
    } catch (const LemmaViolation& e) {
        EXPECT_EQ(e.lemma(), "span-coloring");
        EXPECT_EQ(parse_digraph(e.instance()), k5.digraph());
    }
}

TEST(SpanColoring, RandomAgainstBruteForce) {
    std::mt19937_64 rng(11);
    int formula = 0;
    for (int it = 0; it < 300; ++it) {
        auto cc = random_chorded(4 + it % 7, 0.15, rng);
        if (cc.max_span() == 0) continue;
        const int l = cc.max_span();
        try {
            Coloring c = span_coloring(cc);
            EXPECT_TRUE(verify_coloring(cc.digraph(), c));
            EXPECT_LT(palette(c), 2 * l);
            formula += std::string(last_span_route()) == "formula";
        } catch (const LemmaViolation&) {
            EXPECT_GE(brute::chromatic(cc.digraph()), 2 * l);
        }
    }
    EXPECT_GT(formula, 0);
}

TEST(CombineSplit, Examples) {
    // No arcs across: palettes just overlap.
    Digraph two(4, {{0, 1}, {2, 3}});
    Coloring c = combine_split(two, {0, 1}, {2, 3}, {{0, 1}, 2}, {{0, 1}, 2});
    EXPECT_TRUE(verify_coloring(two, c));
    EXPECT_EQ(palette(c), 2);

    // A = {0} adjacent to two vertices of B.
    Digraph star(4, {{0, 1}, {2, 0}, {1, 2}, {2, 3}});
    Coloring s = combine_split(star, {0}, {1, 2, 3}, {{0}, 1}, {{0, 1, 0}, 2});
    EXPECT_TRUE(verify_coloring(star, s));
    EXPECT_LE(palette(s), 3);

    EXPECT_THROW(combine_split(star, {0}, {1, 2, 3}, {{0}, 1}, {{0, 0, 1}, 2}), ImproperInput);
    EXPECT_THROW(combine_split(star, {0}, {1, 2}, {{0}, 1}, {{0, 1}, 2}), PreconditionError);
}

TEST(CombineSplit, RandomSplitsOfCycles) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        auto cc = random_chorded(9, 0.1, rng);
        const Digraph& d = cc.digraph();
        std::vector<int> a, b;
        for (int v = 0; v < 9; ++v) (rng() % 2 ? a : b).push_back(v);
        if (a.empty() || b.empty()) continue;
        Subdigraph sa = induced_subdigraph(d, a), sb = induced_subdigraph(d, b);
        Coloring ca = optimal_coloring(sa.graph), cb = optimal_coloring(sb.graph);
        Coloring c = combine_split(d, a, b, ca, cb);
        EXPECT_TRUE(verify_coloring(d, c));
        std::vector<char> in_a(9, 0), nb(9, 0);
        for (int v : a) in_a[v] = 1;
        for (auto [x, y] : d.arcs())
            if (in_a[x] != in_a[y]) nb[in_a[x] ? y : x] = 1;
        const int n_a = static_cast<int>(std::count(nb.begin(), nb.end(), 1));
        EXPECT_LE(palette(c), std::max(ca.palette_size + n_a, cb.palette_size));
    }
}

TEST(NeighbourCheck, Examples) {
    auto cc = with_chords(12, {{0, 6}});
    auto r = neighbour_bound_check(cc, {0, 6}, 3);
    EXPECT_EQ(r.n_a, (std::vector<int>{0, 6}));
    EXPECT_EQ(r.n_b, (std::vector<int>{0, 6}));
    EXPECT_TRUE(r.within_windows);
    EXPECT_FALSE(r.violating_arc.has_value());

    auto bad = with_chords(12, {{0, 6}, {2, 9}});
    auto s = neighbour_bound_check(bad, {0, 6}, 3);
    EXPECT_FALSE(s.within_windows);
    ASSERT_TRUE(s.violating_arc.has_value());
    EXPECT_EQ(*s.violating_arc, (Arc{2, 9}));
    ASSERT_TRUE(s.witness.has_value());
    EXPECT_TRUE(verify_subdivision(bad.digraph(), *s.witness));
    EXPECT_TRUE(equivalent_specs(s.witness->spec, OrientedCycleSpec::two_blocks(3, 3)));

    EXPECT_THROW(neighbour_bound_check(with_chords(12, {{0, 3}}), {0, 3}, 3), PreconditionError);
    EXPECT_THROW(neighbour_bound_check(cc, {0, 1}, 3), PreconditionError);
}

TEST(NeighbourCheck, WindowsHoldWithoutSubdivision) {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int it = 0; it < 400 && checked < 40; ++it) {
        auto cc = random_chorded(9, 0.08, rng);
        const int k = 3;
        for (const Arc& a : cc.chords()) {
            if (cc.span(a) < 2 * k - 2) continue;
            auto r = neighbour_bound_check(cc, a, k);
            if (r.witness) {
                EXPECT_TRUE(verify_subdivision(cc.digraph(), *r.witness));
                continue;
            }
            if (brute::contains_subdivision(cc.digraph(), OrientedCycleSpec::two_blocks(k, k))) continue;
            ++checked;
            EXPECT_TRUE(r.within_windows);
            EXPECT_LE(r.n_a.size(), static_cast<std::size_t>(2 * k + 1));
            EXPECT_LE(r.n_b.size(), static_cast<std::size_t>(2 * k + 1));
        }
    }
    EXPECT_GT(checked, 10);
}

TEST(HamiltonianCkk, Examples) {
    auto c10 = with_chords(10, {});
    Certificate a = certify_hamiltonian_ckk(c10, 3);
    ASSERT_TRUE(a.is_coloring());
    EXPECT_TRUE(verify_certificate(c10.digraph(), a));
    EXPECT_EQ(a.bound, 12);
    EXPECT_EQ(a.coloring->palette_size, 2);

    ChordedCycle k7(brute::complete(7), iota(7));
    Certificate b = certify_hamiltonian_ckk(k7, 2);
    ASSERT_TRUE(b.is_witness());
    EXPECT_TRUE(verify_certificate(k7.digraph(), b, OrientedCycleSpec::two_blocks(2, 2)));

    auto c12 = with_chords(12, {{0, 5}, {6, 11}});
    Certificate c = certify_hamiltonian_ckk(c12, 3);
    ASSERT_TRUE(c.is_coloring());
    EXPECT_TRUE(verify_certificate(c12.digraph(), c));
    EXPECT_EQ(c.route, "split:1");

    EXPECT_THROW(certify_hamiltonian_ckk(c10, 1), PreconditionError);
}

TEST(HamiltonianCkk, RandomSoundness) {
    std::mt19937_64 rng(23);
    int splits = 0;
    for (int it = 0; it < 150; ++it) {
        auto cc = random_chorded(6 + it % 9, 0.1 + 0.05 * (it % 5), rng);
        Certificate c = certify_hamiltonian_ckk(cc, 3);
        ASSERT_FALSE(c.kind == CertKind::Diagnostic) << format_digraph(cc.digraph());
        EXPECT_TRUE(verify_certificate(cc.digraph(), c, OrientedCycleSpec::two_blocks(3, 3)));
        if (c.is_coloring()) { EXPECT_LE(c.coloring->palette_size, 12); }
        splits += c.route.rfind("split", 0) == 0;
    }
    EXPECT_GT(splits, 10);
}

TEST(HamiltonianCkk, SplitsAreExercisedOnLongCycles) {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 30; ++it) {
        auto cc = random_chorded(24, 0.04, rng);
        Certificate c = certify_hamiltonian_ckk(cc, 4);
        EXPECT_TRUE(verify_certificate(cc.digraph(), c));
        if (c.is_coloring()) { EXPECT_LE(c.coloring->palette_size, 18); }
    }
}

TEST(HamiltonianCkk, DenseInstancesGiveWitnesses) {
    std::mt19937_64 rng(31);
    std::map<std::string, int> routes;
    for (int n = 13; n <= 16; ++n) {
        ChordedCycle kn(brute::complete(n), iota(n));
        Certificate c = certify_hamiltonian_ckk(kn, 3);
        ASSERT_TRUE(c.is_witness());
        EXPECT_TRUE(verify_certificate(kn.digraph(), c, OrientedCycleSpec::two_blocks(3, 3)));
        ++routes[c.route];
        auto cc = random_chorded(n, 0.9, rng);
        Certificate r = certify_hamiltonian_ckk(cc, 3);
        EXPECT_TRUE(verify_certificate(cc.digraph(), r, OrientedCycleSpec::two_blocks(3, 3)));
        ++routes[r.route];
    }
    EXPECT_GT(routes["neighbour-window"], 0);
}

TEST(HamiltonianCk1, Examples) {
    auto c9 = with_chords(9, {});
    Certificate a = certify_hamiltonian_ck1(c9, 3);
    ASSERT_TRUE(a.is_coloring());
    EXPECT_EQ(a.bound, 4);
    EXPECT_TRUE(verify_certificate(c9.digraph(), a));

    auto c6 = with_chords(6, {{0, 4}});
    Certificate b = certify_hamiltonian_ck1(c6, 3);
    ASSERT_TRUE(b.is_witness());
    EXPECT_EQ(b.route, "long-chord");
    EXPECT_TRUE(verify_certificate(c6.digraph(), b, OrientedCycleSpec::two_blocks(3, 1)));

    std::vector<Arc> short_chords;
    for (int i = 0; i < 12; i += 3) short_chords.emplace_back(i, i + 2);
    short_chords.emplace_back(10, 0);
    auto c12 = with_chords(12, short_chords);
    Certificate c = certify_hamiltonian_ck1(c12, 3);
    ASSERT_TRUE(c.is_coloring());
    EXPECT_TRUE(verify_certificate(c12.digraph(), c));
    EXPECT_LE(c.coloring->palette_size, 4);
    EXPECT_LE(chromatic_number_exact(c12.digraph()), c.coloring->palette_size);

    ChordedCycle k5(brute::complete(5), iota(5));
    Certificate d = certify_hamiltonian_ck1(k5, 2);
    ASSERT_TRUE(d.is_witness());
    EXPECT_TRUE(verify_certificate(k5.digraph(), d, OrientedCycleSpec::two_blocks(2, 1)));
}

TEST(HamiltonianCk1, BoundIsTheMaximum) {
    // max{k+1, ceil((3k-3)/2)}
    const int expect[] = {0, 0, 3, 4, 5, 6, 8, 9, 11};
    for (int k = 2; k <= 8; ++k) {
        Certificate c = certify_hamiltonian_ck1(with_chords(k + 1, {}), k);
        EXPECT_EQ(c.bound, expect[k]) << k;
    }
}

TEST(HamiltonianCk1, RandomAgainstBruteForce) {
    std::mt19937_64 rng(31);
    int eliminated = 0;
    for (int it = 0; it < 200; ++it) {
        const int k = 3 + it % 2;
        auto cc = random_chorded(5 + it % 4, 0.25, rng, it % 3 ? k - 1 : 0);
        Certificate c = certify_hamiltonian_ck1(cc, k);
        ASSERT_FALSE(c.kind == CertKind::Diagnostic);
        EXPECT_TRUE(verify_certificate(cc.digraph(), c, OrientedCycleSpec::two_blocks(k, 1)));
        if (c.is_coloring()) { EXPECT_LE(c.coloring->palette_size, c.bound); }
        eliminated += c.route.rfind("eliminate", 0) == 0;
    }
    EXPECT_GT(eliminated, 20);
}

TEST(HamiltonianCk1, ShortChordsStayWithinFour) {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 100; ++it) {
        auto cc = random_chorded(6 + it % 12, 0.5, rng, 2);
        Certificate c = certify_hamiltonian_ck1(cc, 3);
        EXPECT_TRUE(verify_certificate(cc.digraph(), c));
        if (c.is_coloring()) { EXPECT_LE(c.coloring->palette_size, 4); }
    }
}

// Without a C(k,1), every arc jumps less than k along the cycle, so in- and
// out-degrees stay below k.
TEST(HamiltonianCk1, DegreesBelowKWithoutSubdivision) {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
        const int k = 3 + it % 3;
        auto cc = random_chorded(5 + it % 3, 0.12, rng);
        if (brute::contains_subdivision(cc.digraph(), OrientedCycleSpec::two_blocks(k, 1))) continue;
        ++checked;
        for (int v = 0; v < cc.order(); ++v) {
            EXPECT_LE(cc.digraph().out_degree(v), k - 1);
            EXPECT_LE(cc.digraph().in_degree(v), k - 1);
        }
    }
    EXPECT_GT(checked, 20);
}

// d+(v_i) + d-(v_{i+1}) <= 3k - n - 3 once the minimum semi-degree is 2, n
// exceeds the bound and no C(k,1) exists.
TEST(HamiltonianCk1, VisionsDegreeSum) {
    std::mt19937_64 rng(43);
    int failures = 0;
    for (int it = 0; it < 400; ++it) {
        const int k = 4 + it % 3;
        const int n = std::max(k + 1, (3 * k - 2) / 2) + 1 + static_cast<int>(rng() % 2);
        auto cc = random_chorded(n, 0.35, rng, k - 1);
        const Digraph& d = cc.digraph();
        bool semi2 = true;
        for (int v = 0; v < n; ++v) semi2 = semi2 && d.out_degree(v) >= 2 && d.in_degree(v) >= 2;
        if (!semi2) continue;
        bool claim = true;
        for (int i = 0; i < n; ++i)
            claim = claim && d.out_degree(cc.cycle()[i]) + d.in_degree(cc.cycle()[(i + 1) % n]) <= 3 * k - n - 3;
        // The claim can only fail on a digraph that has the subdivision.
        if (!claim) {
            ++failures;
            EXPECT_TRUE(brute::contains_subdivision(d, OrientedCycleSpec::two_blocks(k, 1)));
        }
    }
    EXPECT_GT(failures, 5);
}

TEST(StrongCk1, Examples) {
    Certificate a = certify_strong_ck1(brute::cycle(7), 4);
    ASSERT_TRUE(a.is_coloring());
    EXPECT_EQ(a.bound, 5);
    EXPECT_TRUE(verify_certificate(brute::cycle(7), a));

    // 8-cycle, vertex 8 entered from 0 and from 4, leaving to 2.
    std::vector<Arc> arcs;
    for (int i = 0; i < 8; ++i) arcs.emplace_back(i, (i + 1) % 8);
    arcs.insert(arcs.end(), {{0, 8}, {4, 8}, {8, 2}});
    Digraph ext(9, arcs);
    Certificate b = certify_strong_ck1(ext, 4);
    ASSERT_TRUE(b.is_witness());
    EXPECT_EQ(b.route, "lemma-k1");
    EXPECT_TRUE(verify_certificate(ext, b, OrientedCycleSpec::two_blocks(4, 1)));

    Certificate c = certify_strong_ck1(brute::complete(5), 2);
    ASSERT_TRUE(c.is_witness());
    EXPECT_EQ(c.bound, 3);
    EXPECT_TRUE(verify_certificate(brute::complete(5), c, OrientedCycleSpec::two_blocks(2, 1)));

    EXPECT_THROW(certify_strong_ck1(Digraph(3, {{0, 1}, {1, 2}}), 3), PreconditionError);
    EXPECT_THROW(certify_strong_ck1(brute::cycle(3), 1), PreconditionError);
}

TEST(StrongCk1, RandomAgainstBruteForce) {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 150; ++it) {
        const int k = 2 + it % 3;
        Digraph d = brute::random_strong(5 + it % 4, 0.3, rng);
        Certificate c = certify_strong_ck1(d, k);
        ASSERT_FALSE(c.kind == CertKind::Diagnostic) << format_digraph(d);
        EXPECT_TRUE(verify_certificate(d, c, OrientedCycleSpec::two_blocks(k, 1)));
        if (c.is_coloring()) { EXPECT_LE(c.coloring->palette_size, std::max(k + 1, 2 * k - 4)); }
    }
}

// Dense blocks glued at cut vertices, hung off a long cycle: exercises the
// block and W-set routes where colouring alone cannot succeed.
TEST(StrongCk1, StructuredRoutes) {
    std::mt19937_64 rng(53);
    std::map<std::string, int> routes;
    for (int it = 0; it < 60; ++it) {
        const int k = 3;
        const int m = 5 + it % 3;
        std::vector<Arc> arcs;
        for (int i = 0; i < m; ++i) arcs.emplace_back(i, (i + 1) % m);
        // A K5 attached at vertex 0.
        std::vector<int> clique{0, m, m + 1, m + 2, m + 3};
        for (int x : clique)
            for (int y : clique)
                if (x != y) arcs.emplace_back(x, y);
        Digraph d(m + 4, arcs);
        std::vector<int> perm = iota(m + 4);
        std::shuffle(perm.begin(), perm.end(), rng);
        d = brute::permuted(d, perm);
        Certificate c = certify_strong_ck1(d, k);
        EXPECT_TRUE(c.is_witness());
        EXPECT_TRUE(verify_certificate(d, c, OrientedCycleSpec::two_blocks(k, 1)));
        ++routes[c.route.substr(0, c.route.find(':'))];
    }
    EXPECT_GT(routes["lemma-k1"] + routes["block"], 0);
}

namespace {

/// Directed 9-cycle, a complete digraph on 9..13 entered only by 0 -> 9 and
/// left only towards 8, plus any extra arcs.
Digraph pendant_clique(std::vector<Arc> extra) {
    std::vector<Arc> arcs = std::move(extra);
    for (int i = 0; i < 9; ++i) arcs.emplace_back(i, (i + 1) % 9);
    for (int x = 9; x < 14; ++x)
        for (int y = 9; y < 14; ++y)
            if (x != y) arcs.emplace_back(x, y);
    arcs.insert(arcs.end(), {{0, 9}, {13, 8}, {11, 8}});
    return Digraph(14, arcs);
}

}  // namespace

TEST(StrongCk1, CliqueCutsetSplit) {
    Digraph d = pendant_clique({});
    Certificate c = certify_strong_ck1(d, 3);
    ASSERT_TRUE(c.is_witness());
    EXPECT_EQ(c.route, "split-D2:hamiltonian:long-chord");
    EXPECT_TRUE(verify_certificate(d, c, OrientedCycleSpec::two_blocks(3, 1)));

    // A second exit makes the cycle through the clique the longest one.
    Digraph e = pendant_clique({{12, 4}});
    Certificate f = certify_strong_ck1(e, 3);
    ASSERT_TRUE(f.is_witness());
    EXPECT_EQ(f.route, "split-D1:hamiltonian:long-chord");
    EXPECT_TRUE(verify_certificate(e, f, OrientedCycleSpec::two_blocks(3, 1)));
}

TEST(StrongCk1, TwoExitsFromOutside) {
    std::vector<Arc> arcs;
    for (int i = 0; i < 9; ++i) arcs.emplace_back(i, (i + 1) % 9);
    arcs.insert(arcs.end(), {{0, 9}, {9, 5}, {9, 7}});
    Digraph d(10, arcs);
    Certificate c = certify_strong_ck1(d, 3);
    ASSERT_TRUE(c.is_witness());
    EXPECT_EQ(c.route, "w-exits");
    EXPECT_TRUE(verify_certificate(d, c, OrientedCycleSpec::two_blocks(3, 1)));
}
