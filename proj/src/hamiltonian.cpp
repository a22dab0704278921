// Digraphs with a given Hamiltonian dicycle. Colourings come from chord
// spans, splits along a long chord, and vertex elimination for C(k,1);
// whenever a promised bound fails the same case analysis yields a witness.
#include "cyclewright/hamiltonian.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <variant>

#include "certify_util.hpp"
#include "cyclewright/handles.hpp"
#include "cyclewright/oracles.hpp"

namespace cw {

using detail::chain;

ChordedCycle::ChordedCycle(Digraph d, std::vector<int> cycle) : d_(std::move(d)), cycle_(std::move(cycle)) {
    const int n = d_.order();
    if (n < 2 || static_cast<int>(cycle_.size()) != n)
        throw PreconditionError("ChordedCycle: the cycle must visit every vertex");
    pos_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = cycle_[i];
        if (v < 0 || v >= n || pos_[v] >= 0) throw PreconditionError("ChordedCycle: cycle is not a vertex permutation");
        pos_[v] = i;
    }
    for (int i = 0; i < n; ++i)
        if (!d_.has_arc(cycle_[i], cycle_[(i + 1) % n]))
            throw PreconditionError("ChordedCycle: missing cycle arc " + std::to_string(cycle_[i]) + " -> " +
                                    std::to_string(cycle_[(i + 1) % n]));
}

int ChordedCycle::forward(int u, int v) const {
    const int n = order();
    return ((pos_[v] - pos_[u]) % n + n) % n;
}

int ChordedCycle::cycle_distance(int u, int v) const {
    const int f = forward(u, v);
    return std::min(f, order() - f);
}

std::vector<Arc> ChordedCycle::chords() const {
    std::vector<Arc> r;
    for (const Arc& a : d_.arcs())
        if (!is_cycle_arc(a.first, a.second)) r.push_back(a);
    return r;
}

int ChordedCycle::max_span() const {
    int best = 0;
    for (const Arc& a : chords()) best = std::max(best, span(a));
    return best;
}

std::vector<int> ChordedCycle::segment(int u, int v) const {
    const int n = order();
    std::vector<int> r{u};
    for (int i = pos_[u]; r.back() != v;) {
        i = (i + 1) % n;
        r.push_back(cycle_[i]);
    }
    return r;
}

namespace {

thread_local const char* g_span_route = "formula";
thread_local std::vector<LemmaViolation> g_span_incidents;

std::string instance_text(const ChordedCycle& cc) {
    std::string s = format_digraph(cc.digraph()) + "# cycle";
    for (int v : cc.cycle()) s += " " + std::to_string(v);
    return s + "\n";
}

Coloring cycle_coloring(const ChordedCycle& cc) {
    const int n = cc.order();
    Coloring c{std::vector<int>(n, 0), n % 2 ? 3 : 2};
    for (int i = 0; i < n; ++i) c.color[cc.cycle()[i]] = i % 2;
    if (n % 2) c.color[cc.cycle()[n - 1]] = 2;
    return c;
}

/// A colouring of a side with no long chord; exact colouring when the span
/// formula does not deliver.
Coloring side_coloring(const ChordedCycle& cc) {
    if (cc.max_span() == 0) return cycle_coloring(cc);
    try {
        return span_coloring(cc);
    } catch (const LemmaViolation& e) {
        g_span_incidents.push_back(e);
        return optimal_coloring(cc.digraph(), 64);
    }
}

int palette_of(const Coloring& c) {
    int p = 0;
    for (int x : c.color) p = std::max(p, x + 1);
    return p;
}

}  // namespace

const char* last_span_route() { return g_span_route; }
const std::vector<LemmaViolation>& span_incidents() { return g_span_incidents; }

Coloring span_coloring(const ChordedCycle& cc) {
    const int n = cc.order(), l = cc.max_span();
    if (l == 0) throw PreconditionError("span_coloring: no chord");
    Coloring c{std::vector<int>(n, 0), 0};
    if (n < 2 * l) {
        for (int i = 0; i < n; ++i) c.color[cc.cycle()[i]] = i;
        c.palette_size = n;
    } else {
        // Blocks of l along the cycle; the r leftover vertices get l, l+1, ...
        const int q = n / l, r = n % l;
        for (int i = 1; i <= n; ++i) c.color[cc.cycle()[i - 1]] = i <= q * l ? i % l : l + (i - q * l) - 1;
        c.palette_size = l + r;
    }
    if (verify_coloring(cc.digraph(), c)) {
        g_span_route = "formula";
        return c;
    }
    g_span_route = "exact";
    if (auto e = color_with_at_most(cc.digraph(), 2 * l - 1)) return *e;
    throw LemmaViolation("span-coloring", "no proper colouring with fewer than " + std::to_string(2 * l) + " colours",
                         instance_text(cc));
}

Coloring combine_split(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b, const Coloring& col_a,
                       const Coloring& col_b) {
    const int n = d.order();
    if (col_a.color.size() != a.size() || col_b.color.size() != b.size())
        throw ImproperInput("combine_split: colouring size does not match its part");
    std::vector<int> side(n, -1), idx(n, -1);
    for (int part = 0; part < 2; ++part) {
        const auto& s = part ? b : a;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const int v = s[i];
            if (v < 0 || v >= n || side[v] >= 0) throw PreconditionError("combine_split: (A,B) is not a partition");
            side[v] = part;
            idx[v] = static_cast<int>(i);
        }
    }
    if (static_cast<int>(a.size() + b.size()) != n) throw PreconditionError("combine_split: (A,B) is not a partition");
    auto col = [&](int v) { return side[v] ? col_b.color[idx[v]] : col_a.color[idx[v]]; };
    for (int v = 0; v < n; ++v)
        if (col(v) < 0) throw ImproperInput("combine_split: negative colour");
    std::vector<int> nbr_colours;
    for (auto [u, v] : d.arcs()) {
        if (side[u] == side[v]) {
            if (col(u) == col(v)) throw ImproperInput("combine_split: input colouring is not proper");
            continue;
        }
        const int x = side[u] ? u : v;
        nbr_colours.push_back(col_b.color[idx[x]]);
    }
    std::sort(nbr_colours.begin(), nbr_colours.end());
    nbr_colours.erase(std::unique(nbr_colours.begin(), nbr_colours.end()), nbr_colours.end());
    // Colours seen on N(A) move to the front, A goes above them.
    const int m = static_cast<int>(nbr_colours.size());
    const int pb = std::max(col_b.palette_size, palette_of(col_b));
    std::vector<int> perm(pb, -1);
    for (int i = 0; i < m; ++i) perm[nbr_colours[i]] = i;
    for (int c = 0, next = m; c < pb; ++c)
        if (perm[c] < 0) perm[c] = next++;
    Coloring out{std::vector<int>(n, 0), 0};
    for (int v = 0; v < n; ++v) out.color[v] = side[v] ? perm[col(v)] : m + col(v);
    out.palette_size = std::max(m + std::max(col_a.palette_size, palette_of(col_a)), pb);
    return out;
}

NeighbourCheck neighbour_bound_check(const ChordedCycle& cc, const Arc& chord, int k) {
    const Digraph& d = cc.digraph();
    if (!d.has_arc(chord.first, chord.second) || cc.is_cycle_arc(chord.first, chord.second))
        throw PreconditionError("neighbour_bound_check: not a chord");
    if (cc.span(chord) < 2 * k - 2) throw PreconditionError("neighbour_bound_check: chord span below 2k-2");
    const int n = cc.order();
    // Relative 1-based indices: the chord is v_1 -> v_j.
    auto rel = [&](int v) { return cc.forward(chord.first, v) + 1; };
    auto V = [&](int i) { return cc.cycle()[(cc.pos(chord.first) + i - 1) % n]; };
    const int j = rel(chord.second);
    auto in_a = [&](int r) { return r >= 2 && r <= j - 1; };
    auto in_b = [&](int r) { return r >= j + 1; };
    // Where N(B) may sit (A's end vertices plus the chord ends) and where
    // N(A) may sit.
    auto window_nb = [&](int r) { return r <= k || (r >= j - k + 1 && r <= j); };
    auto window_na = [&](int r) { return r == 1 || (r >= j && r <= j + k - 2) || r >= n - k + 2; };

    NeighbourCheck out;
    std::set<int> na, nb;
    std::vector<Arc> across, outside;
    for (auto [x, y] : d.arcs()) {
        const int rx = rel(x), ry = rel(y);
        if (in_a(rx) && !in_a(ry)) na.insert(y);
        if (in_a(ry) && !in_a(rx)) na.insert(x);
        if (in_b(rx) && !in_b(ry)) nb.insert(y);
        if (in_b(ry) && !in_b(rx)) nb.insert(x);
        if ((in_a(rx) && in_b(ry)) || (in_b(rx) && in_a(ry))) {
            const int ra = in_a(rx) ? rx : ry, rb = in_a(rx) ? ry : rx;
            (window_na(rb) && window_nb(ra) ? across : outside).push_back({x, y});
        }
    }
    out.n_a.assign(na.begin(), na.end());
    out.n_b.assign(nb.begin(), nb.end());
    for (int v : out.n_a) out.within_windows = out.within_windows && window_na(rel(v));
    for (int v : out.n_b) out.within_windows = out.within_windows && window_nb(rel(v));
    if (!outside.empty()) out.violating_arc = outside.front();

    auto seg = [&](int i, int t) { return cc.segment(V(i), V(t)); };
    auto arc = [](int x, int y) { return std::vector<int>{x, y}; };
    std::vector<Arc> order = outside;
    order.insert(order.end(), across.begin(), across.end());
    for (auto [x, y] : order) {
        std::vector<std::optional<SubdivisionWitness>> cands;
        const int rx = rel(x), ry = rel(y);
        if (in_a(rx)) {
            const int a = rx, b = ry;
            cands.push_back(two_path_witness(k, k, seg(a, j), chain({arc(x, y), seg(b, 1), arc(V(1), V(j))})));
            cands.push_back(two_path_witness(k, k, chain({seg(1, a), arc(x, y)}), chain({arc(V(1), V(j)), seg(j, b)})));
        } else {
            const int a = ry, b = rx;
            cands.push_back(two_path_witness(k, k, seg(1, a), chain({arc(V(1), V(j)), seg(j, b), arc(x, y)})));
            cands.push_back(two_path_witness(k, k, chain({arc(x, y), seg(a, j)}), chain({seg(b, 1), arc(V(1), V(j))})));
        }
        for (auto& w : cands)
            if (w && verify_subdivision(d, *w)) {
                out.violating_arc = Arc{x, y};
                out.witness = std::move(w);
                return out;
            }
    }
    return out;
}

namespace {

using Params = detail::Params;
using Outcome = std::variant<Coloring, SubdivisionWitness>;

/// Exhaustive search, then an exact colouring, then a diagnostic.
Certificate last_resort(const Digraph& d, const OrientedCycleSpec& spec, const std::string& thm, const Params& params,
                        int bound, const std::string& why) {
    auto r = find_subdivision(d, spec, detail::fallback_budget());
    if (r.found()) return Certificate::make_witness(thm, params, bound, *r.witness, "fallback:" + why);
    if (r.absent()) {
        if (auto c = color_with_at_most(d, bound, detail::fallback_budget()))
            return detail::coloring_cert(thm, params, bound, *c, "fallback-exact:" + why);
        return Certificate::make_diagnostic(
            thm, params, bound, {thm, "no " + spec.name() + " subdivision although the bound is exceeded (" + why + ")", d});
    }
    throw BudgetExceeded("fallback subdivision search exhausted its budget (" + why + ")");
}

struct CkkSplit {
    int k, bound;
    int splits = 0;
    bool window_witness = false;

    Outcome solve(const ChordedCycle& cc) {
        const Digraph& d = cc.digraph();
        std::optional<Arc> best;
        for (const Arc& a : cc.chords())
            if (cc.span(a) >= 2 * k - 2 && (!best || cc.span(a) < cc.span(*best))) best = a;
        if (!best) return side_coloring(cc);
        ++splits;
        const auto [a, b] = *best;
        const int f = cc.forward(a, b);
        const auto X = cc.segment(a, b), Y = cc.segment(b, a);
        // The X side closes with b -> a, which stands in for C[b, a].
        auto x_side = [&]() {
            Subdigraph s = induced_subdigraph(d, X);
            const int la = 0, lb = static_cast<int>(X.size()) - 1;
            s.graph = s.graph.without_arcs({{la, lb}}).with_arcs({{lb, la}});
            std::vector<int> cyc(X.size());
            for (std::size_t i = 0; i < X.size(); ++i) cyc[i] = static_cast<int>(i);
            return std::pair{s, ChordedCycle(s.graph, cyc)};
        };
        auto y_side = [&]() {
            Subdigraph s = induced_subdigraph(d, Y);
            std::vector<int> cyc(Y.size());
            for (std::size_t i = 0; i < Y.size(); ++i) cyc[i] = static_cast<int>(i);
            return std::pair{s, ChordedCycle(s.graph, cyc)};
        };
        const bool x_small = 2 * f <= cc.order();
        auto [small_sub, small_cc] = x_small ? x_side() : y_side();
        auto [big_sub, big_cc] = x_small ? y_side() : x_side();

        Outcome big = solve(big_cc);
        if (auto* w = std::get_if<SubdivisionWitness>(&big)) {
            SubdivisionWitness lifted = w->lifted(big_sub);
            if (x_small || d.has_arc(b, a)) return lifted;
            return detail::substitute_arc(lifted, b, a, Y);
        }
        Coloring small_col = side_coloring(small_cc);
        const auto& sv = small_sub.to_parent;
        std::vector<int> inner(sv.begin() + 1, sv.end() - 1), rest;
        Coloring col_inner{{}, small_col.palette_size};
        for (std::size_t i = 1; i + 1 < sv.size(); ++i) col_inner.color.push_back(small_col.color[i]);
        Coloring col_rest{{}, std::get<Coloring>(big).palette_size};
        for (std::size_t i = 0; i < big_sub.to_parent.size(); ++i) {
            rest.push_back(big_sub.to_parent[i]);
            col_rest.color.push_back(std::get<Coloring>(big).color[i]);
        }
        Coloring all = combine_split(d, inner, rest, col_inner, col_rest);
        if (palette_of(all) <= bound) return all;
        auto nc = neighbour_bound_check(cc, *best, k);
        if (nc.witness) {
            window_witness = true;
            return *nc.witness;
        }
        return all;
    }
};

}  // namespace

Certificate certify_hamiltonian_ckk(const ChordedCycle& cc, int k) {
    if (k < 2) throw InfeasibleParameters("certify_hamiltonian_ckk: need k >= 2");
    const Digraph& d = cc.digraph();
    const std::string thm = "hamiltonian-ckk";
    const Params params{{"k", k}};
    const int bound = 6 * k - 6;
    const auto spec = OrientedCycleSpec::two_blocks(k, k);
    g_span_incidents.clear();
    if (k == 2) {
        Certificate c = certify_C22(d);
        c.theorem = thm;
        c.params = params;
        c.bound = bound;
        c.route = "C22:" + c.route;
        return c;
    }
    CkkSplit s{k, bound};
    Outcome r = s.solve(cc);
    const std::string route = s.splits ? "split:" + std::to_string(s.splits) : "span";
    if (auto* w = std::get_if<SubdivisionWitness>(&r)) {
        if (auto c = detail::accept(d, *w, thm, params, bound, s.window_witness ? "neighbour-window" : route)) return *c;
        return last_resort(d, spec, thm, params, bound, route);
    }
    const Coloring& col = std::get<Coloring>(r);
    if (verify_coloring(d, col) && palette_of(col) <= bound) return detail::coloring_cert(thm, params, bound, col, route);
    return last_resort(d, spec, thm, params, bound, route);
}

namespace {

int ck1_bound(int k) { return std::max(k + 1, (3 * k - 2) / 2); }

}  // namespace

Certificate certify_hamiltonian_ck1(const ChordedCycle& cc, int k) {
    if (k < 2) throw InfeasibleParameters("certify_hamiltonian_ck1: need k >= 2");
    const Digraph& d = cc.digraph();
    const std::string thm = "hamiltonian-ck1";
    const Params params{{"k", k}};
    const int bound = ck1_bound(k);
    const auto spec = OrientedCycleSpec::two_blocks(k, 1);
    if (k == 2) {
        Certificate c = certify_C22(d);
        if (c.is_coloring()) return detail::coloring_cert(thm, params, bound, *c.coloring, "C22");
        if (c.is_witness())
            if (auto r = detail::accept(d, detail::respec(*c.witness, spec), thm, params, bound, "C22")) return *r;
        return last_resort(d, spec, thm, params, bound, "C22");
    }

    // Current digraph on the surviving vertices: original arcs among them
    // plus shortcut cycle arcs, each standing for a dipath of d.
    const int n = d.order();
    std::vector<int> cyc = cc.cycle();
    std::set<Arc> arcs(d.arcs().begin(), d.arcs().end());
    std::map<Arc, std::vector<int>> expand;
    std::vector<int> removed;
    auto path_of = [&](int x, int y) {
        auto it = expand.find({x, y});
        return it == expand.end() ? std::vector<int>{x, y} : it->second;
    };
    auto expanded = [&](const std::vector<int>& p) {
        std::vector<int> r{p.front()};
        for (std::size_t i = 1; i < p.size(); ++i) {
            auto q = path_of(p[i - 1], p[i]);
            r.insert(r.end(), q.begin() + 1, q.end());
        }
        return r;
    };

    while (true) {
        const int m = static_cast<int>(cyc.size());
        std::vector<int> pos(n, -1);
        for (int i = 0; i < m; ++i) pos[cyc[i]] = i;
        auto seg = [&](int x, int y) {
            std::vector<int> r{x};
            for (int i = pos[x]; r.back() != y;) r.push_back(cyc[i = (i + 1) % m]);
            return r;
        };
        for (auto [x, y] : arcs)
            if ((pos[y] - pos[x] + m) % m >= k) {
                auto w = two_path_witness(k, 1, expanded(seg(x, y)), {x, y});
                if (auto c = detail::accept(d, w, thm, params, bound, "long-chord")) return *c;
            }
        if (m <= bound) break;

        std::vector<std::set<int>> nb(n);
        for (auto [x, y] : arcs) {
            nb[x].insert(y);
            nb[y].insert(x);
        }
        int v = cyc[0];
        for (int x : cyc)
            if (nb[x].size() < nb[v].size()) v = x;
        if (static_cast<int>(nb[v].size()) <= bound - 1) {
            const int i = pos[v], p = cyc[(i + m - 1) % m], s = cyc[(i + 1) % m];
            std::vector<int> through = expanded({p, v, s});
            for (auto it = arcs.begin(); it != arcs.end();)
                if (it->first == v || it->second == v) {
                    expand.erase(*it);
                    it = arcs.erase(it);
                } else {
                    ++it;
                }
            if (arcs.insert({p, s}).second) expand[{p, s}] = through;
            cyc.erase(cyc.begin() + i);
            removed.push_back(v);
            continue;
        }

        // Every degree is high: the paths behind the degree-sum claim.
        std::vector<std::optional<SubdivisionWitness>> cands;
        for (int i = 0; i < m; ++i) {
            const int vi = cyc[i], vn = cyc[(i + 1) % m];
            int plus = -1, minus = -1;
            for (int t = 2; t < m && plus < 0; ++t)
                if (arcs.count({vi, cyc[(i + t) % m]})) plus = cyc[(i + t) % m];
            for (int t = 3; t <= m; ++t)
                if (arcs.count({cyc[(i + t) % m], vn})) minus = cyc[(i + t) % m];
            if (plus < 0 || minus < 0) continue;
            auto p = seg(plus, minus);
            p.insert(p.begin(), vi);
            p.push_back(vn);
            cands.push_back(two_path_witness(k, 1, expanded(p), expanded({vi, vn})));
        }
        for (const auto& w : cands)
            if (auto c = detail::accept(d, w, thm, params, bound, "visions")) return *c;
        return last_resort(d, spec, thm, params, bound, "no-low-degree-vertex");
    }

    Coloring col{std::vector<int>(n, -1), bound};
    for (std::size_t i = 0; i < cyc.size(); ++i) col.color[cyc[i]] = static_cast<int>(i);
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        std::vector<char> used(n + 1, 0);
        for (int y : d.neighbours(*it))
            if (col.color[y] >= 0) used[col.color[y]] = 1;
        int c = 0;
        while (used[c]) ++c;
        col.color[*it] = c;
    }
    const std::string route = removed.empty() ? "small" : "eliminate:" + std::to_string(removed.size());
    if (palette_of(col) <= bound) return detail::coloring_cert(thm, params, bound, col, route);
    return last_resort(d, spec, thm, params, bound, route);
}

namespace {

struct StrongCk1 {
    int k, bound;
    std::string thm;
    Params params;
    OrientedCycleSpec spec;

    std::optional<Certificate> witness(const Digraph& d, const std::optional<SubdivisionWitness>& w,
                                       const std::string& route) const {
        return detail::accept(d, w, thm, params, bound, route);
    }

    /// Two dipaths from distinct cycle vertices into the same outside vertex.
    std::optional<Certificate> lemma_k1(const Digraph& d, const std::vector<int>& C) const {
        const int n = d.order(), m = static_cast<int>(C.size());
        std::vector<int> pos(n, -1);
        for (int i = 0; i < m; ++i) pos[C[i]] = i;
        auto seg = [&](int x, int y) {
            std::vector<int> r{x};
            for (int i = pos[x]; r.back() != y;) r.push_back(C[i = (i + 1) % m]);
            return r;
        };
        std::vector<std::vector<int>> par(m, std::vector<int>(n, -2));
        for (int i = 0; i < m; ++i) {
            std::vector<int> q{C[i]};
            par[i][C[i]] = -1;
            for (std::size_t h = 0; h < q.size(); ++h)
                for (int y : d.out(q[h]))
                    if (pos[y] < 0 && par[i][y] == -2) {
                        par[i][y] = q[h];
                        q.push_back(y);
                    }
        }
        auto path = [&](int i, int y) {
            std::vector<int> p;
            for (int z = y; z != -1; z = par[i][z]) p.push_back(z);
            return detail::reversed(p);
        };
        for (int y = 0; y < n; ++y) {
            if (pos[y] >= 0) continue;
            for (int i1 = 0; i1 < m; ++i1) {
                if (par[i1][y] == -2) continue;
                for (int i2 = 0; i2 < m; ++i2) {
                    if (i2 == i1 || par[i2][y] == -2) continue;
                    auto p1 = path(i1, y), p2 = path(i2, y);
                    std::size_t zi = 0;
                    while (std::find(p1.begin(), p1.end(), p2[zi]) == p1.end()) ++zi;
                    const int z = p2[zi];
                    const auto z1 = static_cast<std::size_t>(std::find(p1.begin(), p1.end(), z) - p1.begin());
                    auto w = two_path_witness(k, 1, detail::concat(seg(C[i1], C[i2]), detail::slice(p2, 0, zi)),
                                              detail::slice(p1, 0, z1));
                    if (auto c = witness(d, w, "lemma-k1")) return c;
                }
            }
        }
        return std::nullopt;
    }

    Certificate solve(const Digraph& d) const {
        // Structural witnesses around a longest cycle come before any colouring.
        if (auto C = longest_directed_cycle(d, detail::fallback_budget());
            C && static_cast<int>(C->size()) >= 2 * k - 3 && static_cast<int>(C->size()) < d.order())
            if (auto c = lemma_k1(d, *C); c || (c = w_sets(d, *C, false))) return *c;
        if (auto c = color_with_at_most(d, bound)) return detail::coloring_cert(thm, params, bound, *c, "exact");
        for (const auto& block : biconnected_components(d)) {
            if (static_cast<int>(block.size()) == d.order()) return solve_block(d);
            Subdigraph s = induced_subdigraph(d, block);
            if (color_with_at_most(s.graph, bound)) continue;
            Certificate c = solve_block(s.graph);
            if (c.is_witness())
                if (auto r = witness(d, c.witness->lifted(s), "block:" + c.route)) return *r;
            break;
        }
        return last_resort(d, spec, thm, params, bound, "blocks");
    }

    /// For each arc v -> w leaving C: the part W of D - C around w. Two exits
    /// from W to distinct cycle vertices close a C(k,1); a single exit vertex
    /// and a single entry arc allow the clique-cutset split.
    std::optional<Certificate> w_sets(const Digraph& d, const std::vector<int>& C, bool allow_split) const {
        const int n = d.order();
        const int m = static_cast<int>(C.size());
        std::vector<int> pos(n, -1);
        for (int i = 0; i < m; ++i) pos[C[i]] = i;
        auto seg = [&](int x, int y) {
            std::vector<int> r{x};
            for (int i = pos[x]; r.back() != y;) r.push_back(C[i = (i + 1) % m]);
            return r;
        };
        for (int v : C)
            for (int w : d.out(v)) {
                if (pos[w] >= 0) continue;
                // W: what w reaches in the underlying graph of D - C.
                std::vector<int> W{w};
                std::vector<char> inW(n, 0);
                inW[w] = 1;
                for (std::size_t h = 0; h < W.size(); ++h)
                    for (int x : d.neighbours(W[h]))
                        if (pos[x] < 0 && !inW[x]) {
                            inW[x] = 1;
                            W.push_back(x);
                        }
                Subdigraph sw = induced_subdigraph(d, W);
                if (reachable_from(sw.graph, 0).size() != W.size()) continue;
                Leveling T = bfs_leveling(sw.graph, 0);
                std::vector<int> local(n, -1);
                for (int i = 0; i < static_cast<int>(W.size()); ++i) local[W[i]] = i;
                auto tree = [&](int r, int x) { return sw.lift(T.tree_path(local[r], local[x])); };
                auto lca = [&](int a, int b) { return W[T.lca(local[a], local[b])]; };

                std::vector<Arc> exits, entries;
                for (int x : W) {
                    for (int y : d.out(x))
                        if (!inW[y]) exits.emplace_back(x, y);
                    for (int y : d.in(x))
                        if (!inW[y]) entries.emplace_back(y, x);
                }
                for (auto [a, y] : exits)
                    for (auto [b, z] : exits) {
                        if (y == z) continue;
                        const int r = lca(a, b);
                        auto ta = detail::concat(tree(r, a), {a, y}), tb = detail::concat(tree(r, b), {b, z});
                        if (auto c = witness(d, two_path_witness(k, 1, detail::concat(ta, seg(y, z)), tb), "w-exits"))
                            return c;
                        if (auto c = witness(d, two_path_witness(k, 1, ta, detail::concat(tb, seg(z, y))), "w-exits"))
                            return c;
                    }
                if (exits.empty() || entries.size() != 1) continue;
                const int y = exits.front().second, a = exits.front().first;
                if (y == v || std::any_of(exits.begin(), exits.end(), [&](const Arc& e) { return e.second != y; }))
                    continue;
                if (!allow_split) continue;
                if (auto c = split(d, W, inW, v, y, tree(w, a), seg(y, v))) return c;
            }
        return std::nullopt;
    }

    Certificate solve_block(const Digraph& d) const {
        const int n = d.order();
        auto C = longest_directed_cycle(d, detail::fallback_budget());
        if (!C) return last_resort(d, spec, thm, params, bound, "no-cycle");
        const int m = static_cast<int>(C->size());
        if (m == n) {
            Certificate c = certify_hamiltonian_ck1(ChordedCycle(d, *C), k);
            if (c.is_witness())
                if (auto r = witness(d, c.witness, "hamiltonian:" + c.route)) return *r;
            return last_resort(d, spec, thm, params, bound, "hamiltonian");
        }
        if (auto c = lemma_k1(d, *C)) return *c;
        if (auto c = w_sets(d, *C, true)) return *c;
        return last_resort(d, spec, thm, params, bound, "w-split");
    }

    /// D1 = D - W + vy and D2 = D[W + v + y] + yv share the clique {v, y}.
    std::optional<Certificate> split(const Digraph& d, const std::vector<int>& W, const std::vector<char>& inW, int v,
                                     int y, const std::vector<int>& w_to_a, const std::vector<int>& c_yv) const {
        const int n = d.order();
        std::vector<int> rest, side2 = W;
        for (int x = 0; x < n; ++x)
            if (!inW[x]) rest.push_back(x);
        side2.push_back(v);
        side2.push_back(y);
        if (static_cast<int>(side2.size()) >= n || static_cast<int>(rest.size()) >= n) return std::nullopt;
        Subdigraph s1 = induced_subdigraph(d, rest), s2 = induced_subdigraph(d, side2);
        auto local = [](const Subdigraph& s, int x) {
            return static_cast<int>(std::find(s.to_parent.begin(), s.to_parent.end(), x) - s.to_parent.begin());
        };
        s1.graph = s1.graph.with_arcs({{local(s1, v), local(s1, y)}});
        s2.graph = s2.graph.with_arcs({{local(s2, y), local(s2, v)}});
        if (!is_strong(s1.graph) || !is_strong(s2.graph)) return std::nullopt;

        Certificate c1 = solve(s1.graph), c2 = solve(s2.graph);
        if (c1.is_witness()) {
            auto lifted = c1.witness->lifted(s1);
            if (!d.has_arc(v, y)) lifted = detail::substitute_arc(lifted, v, y, chain({{v, w_to_a.front()}, w_to_a, {w_to_a.back(), y}}));
            if (auto r = witness(d, lifted, "split-D1:" + c1.route)) return r;
        }
        if (c2.is_witness()) {
            auto lifted = c2.witness->lifted(s2);
            if (!d.has_arc(y, v)) lifted = detail::substitute_arc(lifted, y, v, c_yv);
            if (auto r = witness(d, lifted, "split-D2:" + c2.route)) return r;
        }
        if (!c1.is_coloring() || !c2.is_coloring()) return std::nullopt;
        // Align the colours of v and y, then glue.
        const auto& k1 = c1.coloring->color;
        const auto& k2 = c2.coloring->color;
        const int pal = std::max(palette_of(*c1.coloring), palette_of(*c2.coloring));
        std::vector<int> perm(pal, -1), taken(pal, 0);
        for (int x : {v, y}) {
            perm[k2[local(s2, x)]] = k1[local(s1, x)];
            taken[k1[local(s1, x)]] = 1;
        }
        for (int c = 0, next = 0; c < pal; ++c) {
            if (perm[c] >= 0) continue;
            while (taken[next]) ++next;
            perm[c] = next;
            taken[next] = 1;
        }
        Coloring all{std::vector<int>(n, 0), pal};
        for (std::size_t i = 0; i < rest.size(); ++i) all.color[rest[i]] = k1[i];
        for (std::size_t i = 0; i < side2.size(); ++i) all.color[side2[i]] = perm[k2[i]];
        if (verify_coloring(d, all) && pal <= bound)
            return detail::coloring_cert(thm, params, bound, all, "clique-cutset");
        return std::nullopt;
    }
};

}  // namespace

Certificate certify_strong_ck1(const Digraph& d, int k) {
    if (k < 2) throw InfeasibleParameters("certify_strong_ck1: need k >= 2");
    if (!is_strong(d)) throw PreconditionError("certify_strong_ck1: digraph is not strong");
    StrongCk1 s{k, std::max(k + 1, 2 * k - 4), "strong-ck1", {{"k", k}}, OrientedCycleSpec::two_blocks(k, 1)};
    return s.solve(d);
}

}  // namespace cw
