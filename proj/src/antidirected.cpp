// Peel to high minimum degree, cut so a quarter of the arcs cross forward,
// peel the forward arcs to a dense bipartite core, and close a long cycle
// there. Every arc of that cycle goes from A to B, so it is antidirected.
#include "cyclewright/antidirected.hpp"

#include <algorithm>
#include <string>

#include "cyclewright/certs.hpp"

namespace cw {

Subdigraph peel_to_min_degree(const Digraph& d, int min_degree) {
    const int n = d.order();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        deg[v] = d.degree(v);
        if (deg[v] < min_degree) {
            gone[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : d.neighbours(v))
            if (!gone[w] && --deg[w] < min_degree) {
                gone[w] = 1;
                stack.push_back(w);
            }
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subdigraph(d, keep);
}

BipartiteCut quarter_directed_cut(const Digraph& d) {
    const int n = d.order();
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v) side[v] = v % 2;
    // Single-vertex moves while some vertex has more arcs inside its side
    // than across; each move grows the cut, so this stops.
    for (bool moved = true; moved;) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            int same = 0, across = 0;
            for (int w : d.out(v)) (side[w] == side[v] ? same : across)++;
            for (int w : d.in(v)) (side[w] == side[v] ? same : across)++;
            if (same > across) {
                side[v] ^= 1;
                moved = true;
            }
        }
    }
    std::vector<Arc> zero_to_one, one_to_zero;
    for (auto [u, v] : d.arcs())
        if (side[u] != side[v]) (side[u] == 0 ? zero_to_one : one_to_zero).push_back({u, v});
    const int tail = zero_to_one.size() >= one_to_zero.size() ? 0 : 1;
    BipartiteCut cut;
    for (int v = 0; v < n; ++v) (side[v] == tail ? cut.a : cut.b).push_back(v);
    cut.forward_arcs = tail == 0 ? zero_to_one : one_to_zero;
    return cut;
}

BipartiteCore dense_bipartite_subgraph(const BipartiteCut& cut, int p) {
    int n = 0;
    for (int v : cut.a) n = std::max(n, v + 1);
    for (int v : cut.b) n = std::max(n, v + 1);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : cut.forward_arcs) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0), stacked(n, 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= p) {
            stacked[v] = 1;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        gone[v] = 1;
        for (int w : adj[v])
            if (!stacked[w] && --deg[w] <= p) {
                stacked[w] = 1;
                stack.push_back(w);
            }
    }
    BipartiteCore core;
    for (int v : cut.a)
        if (!stacked[v]) core.a.push_back(v);
    for (int v : cut.b)
        if (!stacked[v]) core.b.push_back(v);
    for (const Arc& e : cut.forward_arcs)
        if (!stacked[e.first] && !stacked[e.second]) core.arcs.push_back(e);
    if (core.arcs.empty())
        throw Degenerate("dense_bipartite_subgraph: no vertex keeps more than " + std::to_string(p) + " forward arcs");
    return core;
}

std::vector<int> long_cycle_bipartite(const Digraph& g, int k) {
    const int n = g.order();
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        if (g.degree(v) < k) throw PreconditionError("long_cycle_bipartite: a vertex has degree below k");
        if (start < 0) start = v;
    }
    if (start < 0 || k < 1) throw PreconditionError("long_cycle_bipartite: no edges");
    // Grow a path from `start` until its end has no neighbour off the path.
    std::vector<int> path{start}, at(n, -1);
    at[start] = 0;
    for (bool grown = true; grown;) {
        grown = false;
        for (int w : g.neighbours(path.back()))
            if (at[w] < 0) {
                at[w] = static_cast<int>(path.size());
                path.push_back(w);
                grown = true;
                break;
            }
    }
    const int a = path.back();
    int first = at[a];
    for (int w : g.neighbours(a)) first = std::min(first, at[w]);
    return std::vector<int>(path.begin() + first, path.end());
}

SubdivisionWitness find_antidirected(const Digraph& d, int k) {
    if (k < 2) throw InfeasibleParameters("find_antidirected: need k >= 2");
    if (d.has_digon()) throw PreconditionError("find_antidirected: digraph has a digon");
    Subdigraph h = peel_to_min_degree(d, 8 * k - 8);
    if (h.graph.order() == 0)
        throw PreconditionError("find_antidirected: no subdigraph of minimum degree " + std::to_string(8 * k - 8));
    BipartiteCut cut = quarter_directed_cut(h.graph);
    BipartiteCore core = dense_bipartite_subgraph(cut, k - 1);
    std::vector<int> cyc = long_cycle_bipartite(Digraph(h.graph.order(), core.arcs), k);

    // Start on the A side so blocks alternate forward, backward.
    std::vector<char> in_a(h.graph.order(), 0);
    for (int v : core.a) in_a[v] = 1;
    if (!in_a[cyc.front()]) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
    cyc = h.lift(cyc);
    const int m = static_cast<int>(cyc.size());
    SubdivisionWitness w{OrientedCycleSpec::antidirected(m / 2), cyc, {}};
    for (int i = 0; i < m; ++i) w.paths.push_back({cyc[i], cyc[(i + 1) % m]});
    if (m < 2 * k || !verify_subdivision(d, w))
        throw LemmaViolation("antidirected-cycle", "cycle of length " + std::to_string(m) + " does not verify",
                             format_digraph(d));
    return w;
}

}  // namespace cw
