#include <algorithm>
#include <functional>

#include "certify_util.hpp"
#include "cyclewright/handles.hpp"

namespace cw {

using detail::concat;
using detail::cycle_segment;

namespace {

std::vector<int> open_cycle(const HandleDecomposition& hd) {
    std::vector<int> c = hd.handles.front();
    c.pop_back();
    return c;
}

// A pair of chords (a,b), (c,d) of the Hamiltonian dicycle with c strictly
// inside C]a,b[ and d strictly inside C]b,a[.
struct Crossing {
    int u1, v1, u2, v2;
};

std::vector<Crossing> crossings(const Digraph& g, const std::vector<int>& cycle) {
    const int m = static_cast<int>(cycle.size());
    auto pos = detail::positions(cycle, g.order());
    std::vector<Arc> chords;
    for (auto [a, b] : g.arcs())
        if (cycle[(pos[a] + 1) % m] != b) chords.emplace_back(a, b);
    std::vector<Crossing> out;
    auto rel = [&](int from, int x) { return ((pos[x] - pos[from]) % m + m) % m; };
    for (auto [a, b] : chords)
        for (auto [c, d] : chords) {
            int rb = rel(a, b), rc = rel(a, c), rd = rel(a, d);
            if (0 < rc && rc < rb && rb < rd) out.push_back({a, b, c, d});
        }
    return out;
}

// Strong, bound exceeded: reduce to a robust oriented core and run `surgery`
// there; fall back to the exhaustive search if it produced nothing.
Certificate run_small(const Digraph& d, const std::string& theorem, const OrientedCycleSpec& spec, int bound,
                      const std::function<std::optional<SubdivisionWitness>(const Digraph&, std::string&)>& surgery) {
    if (!is_strong(d)) throw PreconditionError(theorem + ": digraph is not strong");
    if (auto c = color_with_at_most(d, bound)) return detail::coloring_cert(theorem, {}, bound, *c, "exact-coloring");
    Subdigraph core = reduce_to_robust(d);
    std::string route;
    auto w = surgery(core.graph, route);
    if (w) {
        SubdivisionWitness lifted = w->lifted(core);
        if (auto cert = detail::accept(d, lifted, theorem, {}, bound, route)) return *cert;
        route += " (witness rejected)";
    }
    return detail::fallback(d, spec, theorem, {}, bound, route.empty() ? "no surgery applied" : route);
}

std::optional<SubdivisionWitness> c12_surgery(const Digraph& g, std::string& route) {
    HandleDecomposition hd = nice_handle_decomposition(g);
    if (hd.count() < 2) return std::nullopt;
    const auto& h = hd.handles[1];
    route = "handle+cycle-segment";
    return two_path_witness(1, 2, h, cycle_segment(open_cycle(hd), h.front(), h.back()));
}

std::optional<SubdivisionWitness> c22_surgery(const Digraph& g, std::string& route) {
    HandleDecomposition hd = nice_handle_decomposition(g);
    const int q = hd.last_nontrivial();
    if (q >= 1) {
        const auto& h = hd.handles[q];
        Digraph prev(g.order(), hd.arcs_up_to(q));
        auto p = detail::dipath_at_least(prev, h.front(), h.back(), 2);
        route = "last-handle+return-path";
        return two_path_witness(2, 2, h, p);
    }
    auto cycle = open_cycle(hd);
    for (const Crossing& x : crossings(g, cycle)) {
        auto p = concat(cycle_segment(cycle, x.u1, x.u2), {x.u2, x.v2});
        auto r = concat({x.u1, x.v1}, cycle_segment(cycle, x.v1, x.v2));
        route = "crossing-chords";
        return two_path_witness(2, 2, p, r);
    }
    route = "outerplanar";
    return std::nullopt;
}

// Case 1 tail of the C(1,3) argument with x -> t2; prev is D_{q-1}.
std::optional<SubdivisionWitness> c13_escape(const Digraph& prev, int s, int u, int t, int x, int t2) {
    int u2 = -1;
    for (int y : prev.out(s))
        if (y != x && prev.has_arc(y, t2)) {
            u2 = y;
            break;
        }
    if (u2 < 0) return std::nullopt;
    if (u2 == t) return two_path_witness(1, 3, {s, x, t2}, {s, u, t, t2});
    std::vector<char> stop(prev.order(), 0);
    for (int z : {s, u, u2, t2}) stop[z] = 1;
    // Q: dipath from t to the first vertex of {s,u,u2,t2}.
    std::vector<int> pred(prev.order(), -2);
    std::vector<int> queue{t};
    pred[t] = -1;
    int z = -1;
    for (std::size_t i = 0; i < queue.size() && z < 0; ++i)
        for (int y : prev.out(queue[i])) {
            if (pred[y] != -2) continue;
            pred[y] = queue[i];
            if (stop[y]) {
                z = y;
                break;
            }
            queue.push_back(y);
        }
    if (z < 0) return std::nullopt;
    std::vector<int> q;
    for (int y = z; y != -1; y = pred[y]) q.push_back(y);
    std::reverse(q.begin(), q.end());
    std::vector<int> h{s, x, t};
    if (z == s) return two_path_witness(1, 3, {x, t2}, concat(concat({x, t}, q), {s, u2, t2}));
    if (z == u) return two_path_witness(1, 3, {s, u}, concat(h, q));
    if (z == u2) return two_path_witness(1, 3, {s, u2}, concat(h, q));
    return two_path_witness(1, 3, {s, x, t2}, concat({s, u, t}, q));
}

// Two-block witness found in the reversed digraph, read back in the original.
std::optional<SubdivisionWitness> unreverse(std::optional<SubdivisionWitness> w, int k, int l) {
    if (!w) return w;
    auto [p, q] = detail::two_dipaths(*w);
    std::reverse(p.begin(), p.end());
    std::reverse(q.begin(), q.end());
    return two_path_witness(k, l, p, q);
}

std::optional<SubdivisionWitness> c13_surgery(const Digraph& g, std::string& route) {
    HandleDecomposition hd = nice_handle_decomposition(g);
    const int q = hd.last_nontrivial();
    if (q >= 1) {
        const auto& h = hd.handles[q];
        const int s = h.front(), t = h.back();
        Digraph prev(g.order(), hd.arcs_up_to(q));
        if (auto p = detail::dipath_at_least(prev, s, t, 3); !p.empty()) {
            route = "case1:long-return-path";
            return two_path_witness(1, 3, h, p);
        }
        auto p = shortest_dipath(prev, s, t);
        if (h.size() >= 4) {
            route = "case1:long-handle";
            return two_path_witness(1, 3, h, p);
        }
        if (p.size() != 3) return std::nullopt;
        const int u = p[1], x = h[1];
        for (int y : g.out(x))
            if (y != s && y != t) {
                route = "case1:escape-out";
                return c13_escape(prev, s, u, t, x, y);
            }
        for (int y : g.in(x))
            if (y != s && y != t) {
                route = "case1:escape-in";
                Digraph rp = prev.reversed();
                return unreverse(c13_escape(rp, t, u, s, x, y), 1, 3);
            }
        route = "case1:degree-two";
        return std::nullopt;
    }
    auto cycle = open_cycle(hd);
    for (const Crossing& x : crossings(g, cycle)) {
        // Order along C is u1, u2, v1, v2.
        auto p = cycle_segment(cycle, x.u2, x.v1);
        auto r = concat(concat({x.u2, x.v2}, cycle_segment(cycle, x.v2, x.u1)), {x.u1, x.v1});
        route = "case2:crossing-chords";
        return two_path_witness(1, 3, p, r);
    }
    route = "outerplanar";
    return std::nullopt;
}

// ---------------------------------------------------------------- C(2,3)

std::optional<SubdivisionWitness> c23_recursive(const Digraph& d, std::string& route, int depth);

std::optional<SubdivisionWitness> c23_core(const Digraph& g, std::string& route, int depth) {
    HandleDecomposition hd = nice_handle_decomposition(g);
    for (int r = 1; r < hd.count(); ++r) {
        const auto& h = hd.handles[r];
        if (h.size() < 4) continue;
        Digraph prev = Digraph(g.order(), hd.arcs_up_to(r)).without_arcs({{h.front(), h.back()}});
        auto p = shortest_dipath(prev, h.front(), h.back());
        if (p.size() >= 3) {
            route += "/long-handle";
            return two_path_witness(2, 3, h, p);
        }
    }
    const int q = hd.last_nontrivial();
    if (q >= 1) {
        const int b = hd.handles[q][1];
        if (g.degree(b) != 2) {
            route += "/clone-with-extra-neighbour";
            return std::nullopt;
        }
        std::vector<int> keep;
        for (int v = 0; v < g.order(); ++v)
            if (v != b) keep.push_back(v);
        Subdigraph rest = induced_subdigraph(g, keep);
        route += "/drop-clone";
        auto w = c23_recursive(rest.graph, route, depth + 1);
        if (!w) return w;
        return w->lifted(rest);
    }
    auto cycle = open_cycle(hd);
    const int m = static_cast<int>(cycle.size());
    auto pos = detail::positions(cycle, g.order());
    for (const Crossing& x : crossings(g, cycle)) {
        // (u_i,u_k) and (u_j,u_l) with i < j < k < l < i + m.
        const int ui = x.u1, uk = x.v1, uj = x.u2, ul = x.v2;
        auto rel = [&](int v) { return ((pos[v] - pos[ui]) % m + m) % m; };
        const int j = rel(uj), k = rel(uk), l = rel(ul);
        if (j != 1 || l != k + 1) {
            route += "/crossing-far";
            return two_path_witness(2, 3, concat(cycle_segment(cycle, ui, uj), {uj, ul}),
                                    concat({ui, uk}, cycle_segment(cycle, uk, ul)));
        }
        if (k != j + 1) {
            route += "/crossing-wrap";
            auto p = concat(concat({uj, ul}, cycle_segment(cycle, ul, ui)), {ui, uk});
            return two_path_witness(2, 3, p, cycle_segment(cycle, uj, uk));
        }
        // Consecutive crossing: contract u_j, u_k into the arc (u_i, u_l).
        std::vector<int> keep;
        for (int v = 0; v < g.order(); ++v)
            if (v != uj && v != uk) keep.push_back(v);
        Subdigraph rest = induced_subdigraph(g, keep);
        std::vector<int> local(g.order(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
        Digraph shrunk = rest.graph.with_arcs({{local[ui], local[ul]}});
        route += "/contract";
        auto w = c23_recursive(shrunk, route, depth + 1);
        if (!w) return w;
        SubdivisionWitness lifted = w->lifted(rest);
        for (std::size_t i = 0; i < lifted.paths.size(); ++i) {
            auto& p = lifted.paths[i];
            const bool fwd = lifted.spec.blocks[i].dir == Dir::Forward;
            for (std::size_t a = 0; a + 1 < p.size(); ++a) {
                int from = fwd ? p[a] : p[a + 1], to = fwd ? p[a + 1] : p[a];
                if (from == ui && to == ul && !g.has_arc(ui, ul)) {
                    std::vector<int> mid = fwd ? std::vector<int>{uj, uk} : std::vector<int>{uk, uj};
                    p.insert(p.begin() + static_cast<long>(a) + 1, mid.begin(), mid.end());
                    break;
                }
            }
        }
        return lifted;
    }
    route += "/outerplanar";
    return std::nullopt;
}

std::optional<SubdivisionWitness> c23_recursive(const Digraph& d, std::string& route, int depth) {
    if (depth > d.order() + 8 || !is_strong(d)) return std::nullopt;
    if (chromatic_number_exact(d) < 5) {
        route += "/chi-dropped";
        return std::nullopt;
    }
    Subdigraph core = reduce_to_robust(d);
    auto w = c23_core(core.graph, route, depth);
    if (!w) return w;
    return w->lifted(core);
}

}  // namespace

Certificate certify_C12(const Digraph& d) {
    return run_small(d, "C12", OrientedCycleSpec::two_blocks(1, 2), 3, c12_surgery);
}

Certificate certify_C22(const Digraph& d) {
    return run_small(d, "C22", OrientedCycleSpec::two_blocks(2, 2), 3, c22_surgery);
}

Certificate certify_C13(const Digraph& d) {
    return run_small(d, "C13", OrientedCycleSpec::two_blocks(1, 3), 3, c13_surgery);
}

Certificate certify_C23(const Digraph& d) {
    if (!is_strong(d)) throw PreconditionError("C23: digraph is not strong");
    if (auto c = color_with_at_most(d, 4)) return detail::coloring_cert("C23", {}, 4, *c, "exact-coloring");
    std::string route = "clone-analysis";
    auto w = c23_recursive(d, route, 0);
    if (auto cert = detail::accept(d, w, "C23", {}, 4, route)) return *cert;
    return detail::fallback(d, OrientedCycleSpec::two_blocks(2, 3), "C23", {}, 4, route);
}

}  // namespace cw
