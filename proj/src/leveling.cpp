// Level decompositions from a BFS tree: arcs are split by level difference,
// each class is coloured on its own and the product colouring is returned.
// When a class is too chromatic, a forbidden path inside it is combined with
// tree paths into a witness.
#include "cyclewright/leveling.hpp"

#include <algorithm>
#include <functional>
#include <cstdlib>
#include <string>
#include <variant>

#include "certify_util.hpp"
#include "cyclewright/handles.hpp"
#include "cyclewright/oracles.hpp"

namespace cw {

using detail::chain;
using detail::reversed;
using detail::slice;

std::vector<Arc> ArcClasses::of(int cls) const {
    std::vector<Arc> r;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (label[i] == cls) r.push_back(arcs[i]);
    return r;
}

ArcClasses classify_arcs(const Digraph& d, const Leveling& L, ArcClassMode mode, int k, int l) {
    ArcClasses c;
    c.mode = mode;
    c.arcs = d.arcs();
    c.leveling = L;
    const int span = k + l - 3;
    if (mode == ArcClassMode::TwoBlocks && span < 1) throw PreconditionError("classify_arcs: k+l-3 must be positive");
    for (auto [x, y] : c.arcs) {
        int drop = L.level[x] - L.level[y];
        int lab;
        if (drop == 0)
            lab = 0;
        else if (mode == ArcClassMode::HatC4)
            lab = std::abs(drop) == 1 ? 1 : 2;
        else if (std::abs(drop) < span)
            lab = 1;
        else
            lab = L.is_ancestor(y, x) ? 2 : 3;
        c.label.push_back(lab);
    }
    return c;
}

namespace {

using Params = detail::Params;
using Candidate = std::pair<std::string, std::optional<SubdivisionWitness>>;

std::optional<Certificate> first_valid(const Digraph& d, const std::vector<Candidate>& cands, const std::string& theorem,
                                       const Params& params, int bound, const std::string& prefix) {
    for (const auto& [name, w] : cands)
        if (auto c = detail::accept(d, w, theorem, params, bound, prefix + name)) return c;
    return std::nullopt;
}

/// Proper colouring of D restricted to `arcs` with colours lvl mod m.
Coloring level_mod_coloring(const Leveling& L, int m) {
    Coloring c;
    for (int x : L.level) c.color.push_back(x % m);
    c.palette_size = m;
    return c;
}

/// Colours every level's induced subdigraph with at most `cap` colours; on
/// failure returns the offending level index.
std::variant<Coloring, int> colour_levels(const Digraph& d, const Leveling& L, int cap) {
    Coloring c{std::vector<int>(d.order(), 0), cap};
    auto sets = detail::level_sets(L);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        Subdigraph s = induced_subdigraph(d, sets[i]);
        auto ci = color_with_at_most(s.graph, cap);
        if (!ci) return static_cast<int>(i);
        for (int v = 0; v < s.graph.order(); ++v) c.color[s.to_parent[v]] = ci->color[v];
    }
    return c;
}

/// Within one level: a path going a arcs forward then b arcs back, closed up
/// by tree paths from the least common ancestor of its ends. b = 0 takes a
/// plain dipath from Gallai-Roy.
std::optional<SubdivisionWitness> level_witness(const Digraph& d, const Leveling& L, const std::vector<int>& level,
                                                int k, int l) {
    Subdigraph s = induced_subdigraph(d, level);
    std::vector<int> q;
    const int a = k - 1, b = l - 1;
    if (b == 0) {
        auto gr = gallai_roy(s.graph);
        if (static_cast<int>(gr.dipath.size()) < a + 1) return std::nullopt;
        q = s.lift(std::vector<int>(gr.dipath.begin(), gr.dipath.begin() + a + 1));
    } else {
        auto r = find_two_block_path(s.graph, +1, a, b, detail::fallback_budget());
        if (r.status != SearchStatus::Found) return std::nullopt;
        q = s.lift(r.path);
    }
    int v1 = q.front(), v2 = q.back();
    int x = L.lca(v1, v2);
    auto p1 = chain({L.tree_path(x, v1), slice(q, 0, a)});
    auto p2 = chain({L.tree_path(x, v2), reversed(slice(q, a, q.size() - 1))});
    return two_path_witness(k, l, p1, p2);
}

/// Splits a P^-(a,b) found as [s .. y .. t] into the two dipaths leaving y.
std::pair<std::vector<int>, std::vector<int>> split_out_star(const std::vector<int>& path, int a) {
    return {reversed(slice(path, 0, a)), slice(path, a, path.size() - 1)};
}

std::vector<Candidate> d2_candidates(const Leveling& L, std::vector<int> q1, std::vector<int> q2, int k, int l) {
    std::vector<Candidate> out;
    auto T = [&](int a, int x) { return detail::tree_path_or_empty(L, a, x); };
    auto arc = [](int a, int b) { return std::vector<int>{a, b}; };
    for (int swap = 0; swap < 2; ++swap) {
        if (swap) std::swap(q1, q2);
        const int m = static_cast<int>(q1.size()) - 1;  // l+1
        // Q2 climbs past the end of Q1.
        for (int j = 1; j <= m; ++j)
            out.emplace_back("D2:overtake",
                             two_path_witness(k, l, chain({T(q1[1], q1[0]), slice(q2, 0, j), T(q2[j], q1[m])}),
                                              slice(q1, 1, m)));
        // Interleaved: y_i below z_{j-1} and so on.
        for (int i = 1; i < m; ++i)
            for (int j = 1; j <= m; ++j) {
                out.emplace_back("D2:interleave-short",
                                 two_path_witness(k, l, chain({T(q1[i], q2[j - 1]), arc(q2[j - 1], q2[j])}),
                                                  chain({arc(q1[i], q1[i + 1]), T(q1[i + 1], q2[j])})));
                out.emplace_back("D2:interleave-long",
                                 two_path_witness(k, l, chain({T(q2[j - 1], q1[i - 1]), arc(q1[i - 1], q1[i])}),
                                                  chain({arc(q2[j - 1], q2[j]), T(q2[j], q1[i])})));
            }
    }
    return out;
}

/// Shortest dipath from s to the first vertex in `target` (s itself excluded).
std::vector<int> shortest_to_set(const Digraph& d, int s, const std::vector<char>& target) {
    const int n = d.order();
    std::vector<int> pred(n, -2);
    std::vector<int> q{s};
    pred[s] = -1;
    for (std::size_t h = 0; h < q.size(); ++h) {
        int x = q[h];
        for (int y : d.out(x)) {
            if (pred[y] != -2) continue;
            pred[y] = x;
            if (target[y]) {
                std::vector<int> p;
                for (int z = y; z != -1; z = pred[z]) p.push_back(z);
                return reversed(p);
            }
            q.push_back(y);
        }
    }
    return {};
}

std::vector<Candidate> d3_candidates(const Digraph& d, const Leveling& L, const std::vector<int>& q1,
                                     const std::vector<int>& q2, int k, int l) {
    std::vector<Candidate> out;
    auto T = [&](int a, int x) { return detail::tree_path_or_empty(L, a, x); };
    auto add = [&](const char* name, const std::vector<int>& a, const std::vector<int>& b) {
        out.emplace_back(name, two_path_witness(k, l, a, b));
    };
    const int y = q1[0];
    // A vertex of Q1 or Q2 above y in the tree.
    for (const auto* q : {&q1, &q2})
        for (std::size_t i = 2; i < q->size(); ++i) {
            int x = L.lca((*q)[i], (*q)[i - 1]);
            add("D3:ancestor", T(x, (*q)[i - 1]), chain({T(x, y), slice(*q, 0, i - 1)}));
        }
    // Least common ancestors walking down Q1 and Q2.
    std::vector<int> xs{L.lca(y, q1[1])}, ts{L.lca(y, q2[1])};
    for (std::size_t i = 2; i < q1.size(); ++i) xs.push_back(L.lca(xs.back(), q1[i]));
    for (std::size_t i = 2; i < q2.size(); ++i) ts.push_back(L.lca(ts.back(), q2[i]));
    const int xk = xs.back(), tl = ts.back(), yk = q1.back(), zl = q2.back();

    std::vector<char> target(d.order(), 0);
    for (int v : L.tree_path(L.root, y)) target[v] = 1;
    for (std::size_t i = 1; i + 1 < q1.size(); ++i) target[q1[i]] = 1;
    for (std::size_t i = 1; i + 1 < q2.size(); ++i) target[q2[i]] = 1;
    auto py = shortest_to_set(d, yk, target);
    auto pz = shortest_to_set(d, zl, target);
    if (py.empty() || pz.empty()) return out;
    const int yp = py.back(), zp = pz.back();
    auto last_on = [&](const std::vector<int>& p, const std::vector<int>& tp) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (std::find(tp.begin(), tp.end(), p[i]) != tp.end()) best = i;
        return best;
    };
    const auto txk = T(xk, yk), ttl = T(tl, zl);
    const std::size_t wy = last_on(py, txk), wz = last_on(pz, ttl);
    auto tail_y = slice(py, wy, py.size() - 1), tail_z = slice(pz, wz, pz.size() - 1);
    auto idx = [](const std::vector<int>& q, int v) {
        auto it = std::find(q.begin(), q.end(), v);
        return it == q.end() ? std::size_t(0) : static_cast<std::size_t>(it - q.begin());
    };
    const std::size_t jy1 = idx(q1, yp), jy2 = idx(q2, yp), jz1 = idx(q1, zp), jz2 = idx(q2, zp);

    add("D3:return-to-q1", chain({T(xk, py[wy]), tail_y}), chain({T(xk, y), slice(q1, 0, jy1)}));
    add("D3:return-to-q2", chain({T(tl, pz[wz]), tail_z}), chain({T(tl, y), slice(q2, 0, jz2)}));
    // P_y and P_z meet.
    for (std::size_t i = 0; i < py.size(); ++i) {
        std::size_t j = idx(pz, py[i]);
        if (pz[j] != py[i]) continue;
        add("D3:meet", chain({q1, slice(py, 0, i)}), chain({q2, slice(pz, 0, j)}));
        break;
    }
    add("D3:both-on-tree", chain({q1, py, T(yp, zp)}), chain({q2, pz}));
    add("D3:both-on-tree", chain({q1, py}), chain({q2, pz, T(zp, yp)}));
    add("D3:cross-high", chain({T(xk, py[wy]), tail_y}), chain({T(xk, y), slice(q2, 0, jy2)}));
    add("D3:cross-high", chain({T(tl, pz[wz]), tail_z}), chain({T(tl, y), slice(q1, 0, jz1)}));
    add("D3:tree-detour", T(tl, zp), chain({T(tl, pz[wz]), tail_z}));
    add("D3:tree-detour", T(xk, yp), chain({T(xk, py[wy]), tail_y}));
    add("D3:low-return", q1, chain({q2, pz, T(zp, yk)}));
    add("D3:low-return", q2, chain({q1, py, T(yp, zl)}));
    add("D3:final", chain({T(xs[0], q1[1]), slice(q1, 1, q1.size() - 1), py}), chain({T(xs[0], y), slice(q2, 0, jy2)}));
    add("D3:final", chain({T(ts[0], q2[1]), slice(q2, 1, q2.size() - 1), pz}), chain({T(ts[0], y), slice(q1, 0, jz1)}));
    return out;
}

void check_two_block_params(int k, int l) {
    if (l < 2 || k < std::max(l, 3)) throw InfeasibleParameters("need k >= max(l,3) and l >= 2");
}

}  // namespace

Certificate certify_two_blocks_strong(const Digraph& d, int k, int l) {
    check_two_block_params(k, l);
    if (!is_strong(d)) throw PreconditionError("certify_two_blocks_strong: digraph is not strong");
    const std::string thm = "two-blocks-strong";
    const Params params{{"k", k}, {"l", l}};
    const int b0 = k + l - 2, b1 = k + l - 3, b2 = 2 * l + 2, b3 = k + l + 1;
    const int bound = b0 * b1 * b2 * b3;
    const auto spec = OrientedCycleSpec::two_blocks(k, l);

    const int u = first_out_generator(d);
    Leveling L = bfs_leveling(d, u);
    ArcClasses cls = classify_arcs(d, L, ArcClassMode::TwoBlocks, k, l);

    Digraph d0 = spanning_subdigraph(d, cls.of(0));
    auto c0 = colour_levels(d0, L, b0);
    if (std::holds_alternative<int>(c0)) {
        auto sets = detail::level_sets(L);
        auto w = level_witness(d, L, sets[std::get<int>(c0)], k, l);
        if (auto c = detail::accept(d, w, thm, params, bound, "D0:lca")) return *c;
        return detail::fallback(d, spec, thm, params, bound, "D0");
    }

    Digraph d2 = spanning_subdigraph(d, cls.of(2));
    auto c2 = color_with_at_most(d2, b2);
    if (!c2) {
        auto r = find_two_block_path(d2, -1, l + 1, l + 1, detail::fallback_budget());
        if (r.status == SearchStatus::Found) {
            auto [q1, q2] = split_out_star(r.path, l + 1);
            if (auto c = first_valid(d, d2_candidates(L, q1, q2, k, l), thm, params, bound, "")) return *c;
        }
        return detail::fallback(d, spec, thm, params, bound, "D2");
    }

    Digraph d3 = spanning_subdigraph(d, cls.of(3));
    auto c3 = color_with_at_most(d3, b3);
    if (!c3) {
        auto r = find_two_block_path(d3, -1, k, l, detail::fallback_budget());
        if (r.status == SearchStatus::Found) {
            auto [q1, q2] = split_out_star(r.path, k);
            if (auto c = first_valid(d, d3_candidates(d, L, q1, q2, k, l), thm, params, bound, "")) return *c;
        }
        return detail::fallback(d, spec, thm, params, bound, "D3");
    }

    Digraph d1 = spanning_subdigraph(d, cls.of(1));
    Coloring c1 = level_mod_coloring(L, b1);
    Coloring c01 = combine_colorings(d0, std::get<Coloring>(c0), d1, c1);
    Digraph d01 = d0.with_arcs(d1.arcs());
    Coloring c012 = combine_colorings(d01, c01, d2, *c2);
    Digraph d012 = d01.with_arcs(d2.arcs());
    Coloring all = combine_colorings(d012, c012, d3, *c3);
    return detail::coloring_cert(thm, params, bound, all, "levels");
}

namespace {

std::vector<Candidate> a2_candidates(const Digraph& d2, const Leveling& L, int x) {
    std::vector<Candidate> out;
    auto T = [&](int a, int v) { return detail::tree_path_or_empty(L, a, v); };
    std::vector<int> ys = d2.out(x);
    std::sort(ys.begin(), ys.end(), [&](int a, int b) { return L.level[a] < L.level[b]; });
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
            int y = ys[i], z = ys[j], w = L.lca(y, z);
            out.emplace_back("A2:split", detail::hat_c4_witness(T(w, y), {x, y}, {x, z}, T(w, z)));
        }
    if (ys.size() < 3) return out;
    const int y1 = ys.front(), yp = ys.back();
    for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
        const int yi = ys[i];
        for (int z : d2.out(yi)) {
            const int t = L.lca(y1, z);
            out.emplace_back("A2:below",
                             detail::hat_c4_witness(chain({{yi, z}, T(z, y1)}), {x, y1}, {x, yp}, T(yi, yp)));
            out.emplace_back("A2:above",
                             detail::hat_c4_witness({yi, z}, chain({{x, y1}, T(y1, z)}), {x, yp}, T(yi, yp)));
            out.emplace_back("A2:aside", detail::hat_c4_witness(T(t, y1), {x, y1}, {x, yi, z}, T(t, z)));
        }
    }
    return out;
}

}  // namespace

Certificate certify_hatC4(const Digraph& d) {
    const int u = first_out_generator(d);
    if (u < 0) throw NoOutGenerator("certify_hatC4: no out-generator");
    const std::string thm = "hatC4";
    const Params params{};
    const int bound = 24;
    const auto spec = OrientedCycleSpec::hat_c4();
    Leveling L = bfs_leveling(d, u);
    ArcClasses cls = classify_arcs(d, L, ArcClassMode::HatC4);

    Digraph d0 = spanning_subdigraph(d, cls.of(0));
    // Any vertex with two out-neighbours on its own level already closes a
    // Ĉ4 with the tree paths from their least common ancestor.
    std::vector<Candidate> cands;
    for (int y = 0; y < d.order(); ++y) {
        const auto& nb = d0.out(y);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int y1 = nb[i], y2 = nb[j], x = L.lca(y1, y2);
                cands.emplace_back("A0:lca",
                                   detail::hat_c4_witness(L.tree_path(x, y1), {y, y1}, {y, y2}, L.tree_path(x, y2)));
            }
    }
    if (auto c = first_valid(d, cands, thm, params, bound, "")) return *c;
    auto c0 = colour_levels(d0, L, 3);
    if (std::holds_alternative<int>(c0)) return detail::fallback(d, spec, thm, params, bound, "A0");

    Digraph d2 = spanning_subdigraph(d, cls.of(2));
    const int n = d.order();
    // Sinks of D2 take colour 3; the rest is acyclic with out-degree <= 2
    // and is coloured greedily from low levels up.
    Coloring c2{std::vector<int>(n, 3), 4};
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return L.level[a] < L.level[b]; });
    for (int x : order) {
        if (d2.out_degree(x) == 0) continue;
        int nonsink = 0, used = 0;
        for (int y : d2.out(x))
            if (d2.out_degree(y) > 0) {
                ++nonsink;
                used |= 1 << c2.color[y];
            }
        if (nonsink > 2) {
            if (auto c = first_valid(d, a2_candidates(d2, L, x), thm, params, bound, "")) return *c;
            return detail::fallback(d, spec, thm, params, bound, "A2");
        }
        int col = 0;
        while (used & (1 << col)) ++col;
        c2.color[x] = col;
    }

    Digraph d1 = spanning_subdigraph(d, cls.of(1));
    Coloring c1 = level_mod_coloring(L, 2);
    Coloring c01 = combine_colorings(d0, std::get<Coloring>(c0), d1, c1);
    Coloring all = combine_colorings(d0.with_arcs(d1.arcs()), c01, d2, c2);
    return detail::coloring_cert(thm, params, bound, all, "levels");
}

Certificate certify_two_strong(const Digraph& d, int k, int l) {
    if (l < 1 || k < l || k + l < 4 || (k == 2 && l == 2))
        throw InfeasibleParameters("need k >= l >= 1, k+l >= 4 and (k,l) != (2,2)");
    if (!is_k_strong(d, 2)) throw PreconditionError("certify_two_strong: digraph is not 2-strong");
    const std::string thm = "two-strong";
    const Params params{{"k", k}, {"l", l}};
    const int threshold = (k + l - 2) * (k - 1) + 2;
    const int bound = threshold - 1;
    const auto spec = OrientedCycleSpec::two_blocks(k, l);

    if (auto c = color_with_at_most(d, bound)) return detail::coloring_cert(thm, params, bound, *c, "exact");

    const int u = 0;
    Leveling L = bfs_leveling(d, u);
    auto sets = detail::level_sets(L);
    if (static_cast<int>(sets.size()) > k) {
        int v = sets[k].front();
        auto m = menger_two_paths(d, u, v);
        if (m.paths.size() == 2)
            if (auto c = detail::accept(d, two_path_witness(k, l, m.paths[0], m.paths[1]), thm, params, bound, "menger"))
                return *c;
        return detail::fallback(d, spec, thm, params, bound, "menger");
    }
    for (std::size_t i = 1; i < sets.size(); ++i) {
        Subdigraph s = induced_subdigraph(d, sets[i]);
        if (color_with_at_most(s.graph, k + l - 2)) continue;
        if (auto c = detail::accept(d, level_witness(d, L, sets[i], k, l), thm, params, bound, "level-path")) return *c;
        return detail::fallback(d, spec, thm, params, bound, "level-path");
    }
    return detail::fallback(d, spec, thm, params, bound, "no-heavy-level");
}

}  // namespace cw
