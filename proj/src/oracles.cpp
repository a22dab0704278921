#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <string>

#include "cyclewright/oracles.hpp"

namespace cw {

SearchBudget SearchBudget::from_env() {
    SearchBudget b;
    if (const char* env = std::getenv("CYCLEWRIGHT_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) b.node_limit = v;
        } catch (const std::exception&) {
            throw PreconditionError(std::string("CYCLEWRIGHT_BUDGET is not an integer: ") + env);
        }
    }
    return b;
}

BudgetMeter::BudgetMeter(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

bool BudgetMeter::tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (nodes_ > budget_.node_limit) exhausted_ = true;
    // The clock is sampled sparsely; it is the slow path.
    if ((nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_limit) exhausted_ = true;
    return !exhausted_;
}

// ---------------------------------------------------------------- colouring

int greedy_clique_bound(const Digraph& d) {
    int best = d.order() > 0 ? 1 : 0;
    for (int s = 0; s < d.order(); ++s) {
        std::vector<int> clique{s};
        std::vector<int> cand = d.neighbours(s);
        std::sort(cand.begin(), cand.end(), [&](int a, int b) { return d.degree(a) > d.degree(b) || (d.degree(a) == d.degree(b) && a < b); });
        for (int v : cand) {
            bool ok = true;
            for (int c : clique)
                if (!d.adjacent(v, c)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

namespace {

std::optional<Coloring> two_color(const Digraph& d) {
    std::vector<int> col(d.order(), -1);
    for (int s = 0; s < d.order(); ++s) {
        if (col[s] != -1) continue;
        col[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : d.neighbours(v)) {
                if (col[w] == -1) {
                    col[w] = 1 - col[v];
                    q.push_back(w);
                } else if (col[w] == col[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return Coloring{col, 2};
}

class Dsatur {
public:
    Dsatur(const Digraph& d, int k, BudgetMeter& meter)
        : d_(d), k_(k), meter_(meter), col_(d.order(), -1), seen_(d.order(), std::vector<int>(k, 0)), sat_(d.order(), 0) {}

    bool run() { return rec(0, 0); }
    const std::vector<int>& colors() const { return col_; }

private:
    bool rec(int colored, int used) {
        if (!meter_.tick()) return false;
        const int n = d_.order();
        if (colored == n) return true;
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (col_[v] != -1) continue;
            int deg = 0;
            for (int w : d_.neighbours(v))
                if (col_[w] == -1) ++deg;
            if (sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat_[v];
                best_deg = deg;
            }
        }
        int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (seen_[pick][c]) continue;
            assign(pick, c, +1);
            if (rec(colored + 1, std::max(used, c + 1))) return true;
            assign(pick, c, -1);
            if (meter_.exhausted()) return false;
        }
        return false;
    }

    void assign(int v, int c, int delta) {
        col_[v] = delta > 0 ? c : -1;
        for (int w : d_.neighbours(v)) {
            int& s = seen_[w][c];
            if (delta > 0) {
                if (s++ == 0) ++sat_[w];
            } else {
                if (--s == 0) --sat_[w];
            }
        }
    }

    const Digraph& d_;
    int k_;
    BudgetMeter& meter_;
    std::vector<int> col_;
    std::vector<std::vector<int>> seen_;
    std::vector<int> sat_;
};

Coloring greedy_dsatur(const Digraph& d) {
    const int n = d.order();
    std::vector<int> col(n, -1);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n + 1, 0));
    std::vector<int> sat(n, 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (col[v] == -1 && (pick == -1 || sat[v] > sat[pick] || (sat[v] == sat[pick] && d.degree(v) > d.degree(pick))))
                pick = v;
        int c = 0;
        while (seen[pick][c]) ++c;
        col[pick] = c;
        used = std::max(used, c + 1);
        for (int w : d.neighbours(pick))
            if (!seen[w][c]) {
                seen[w][c] = 1;
                ++sat[w];
            }
    }
    return {col, used};
}

}  // namespace

std::optional<Coloring> color_with_at_most(const Digraph& d, int k, const SearchBudget& budget) {
    const int n = d.order();
    if (n == 0) return Coloring{{}, 0};
    if (k <= 0) return std::nullopt;
    if (k == 1) {
        if (d.size() > 0) return std::nullopt;
        return Coloring{std::vector<int>(n, 0), 1};
    }
    if (k == 2) {
        auto c = two_color(d);
        if (c && d.size() == 0) std::fill(c->color.begin(), c->color.end(), 0);
        return c;
    }
    BudgetMeter meter(budget);
    Dsatur search(d, k, meter);
    if (search.run()) {
        Coloring c{search.colors(), 0};
        for (int x : c.color) c.palette_size = std::max(c.palette_size, x + 1);
        return c;
    }
    if (meter.exhausted()) throw BudgetExceeded("colouring search exceeded its budget");
    return std::nullopt;
}

Coloring optimal_coloring(const Digraph& d, int max_order, const SearchBudget& budget) {
    if (d.order() > max_order)
        throw BudgetExceeded("order " + std::to_string(d.order()) + " exceeds exact colouring limit " +
                             std::to_string(max_order));
    if (d.order() == 0) return {};
    Coloring best = greedy_dsatur(d);
    int lb = greedy_clique_bound(d);
    for (int k = lb; k < best.palette_size; ++k) {
        if (auto c = color_with_at_most(d, k, budget)) {
            c->palette_size = k;
            return *c;
        }
    }
    return best;
}

int chromatic_number_exact(const Digraph& d, int max_order, const SearchBudget& budget) {
    return optimal_coloring(d, max_order, budget).palette_size;
}

// ------------------------------------------------------------ cycles, paths

namespace {

using Mask = std::uint64_t;

void require_small(const Digraph& d, const char* what) {
    if (d.order() > 64) throw PreconditionError(std::string(what) + " supports at most 64 vertices");
}

std::vector<Mask> out_masks(const Digraph& d) {
    std::vector<Mask> m(d.order(), 0);
    for (auto [u, v] : d.arcs()) m[u] |= Mask{1} << v;
    return m;
}

Mask reach_within(const std::vector<Mask>& out, int from, Mask allowed) {
    Mask seen = Mask{1} << from, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= out[std::countr_zero(f)];
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

std::optional<std::vector<int>> longest_directed_cycle(const Digraph& d, const SearchBudget& budget) {
    require_small(d, "longest_directed_cycle");
    const int n = d.order();
    auto out = out_masks(d);
    BudgetMeter meter(budget);
    std::vector<int> best, path;
    for (int s = 0; s < n && n - s > static_cast<int>(best.size()); ++s) {
        Mask allowed = s + 1 >= 64 ? 0 : (~Mask{0} << (s + 1));
        if (n < 64) allowed &= (Mask{1} << n) - 1;
        // Vertices that can both be reached from s and reach s.
        Mask fwd = reach_within(out, s, allowed | (Mask{1} << s));
        std::function<void(int, Mask)> dfs = [&](int v, Mask free) {
            if (!meter.tick()) return;
            if ((out[v] >> s & 1) && path.size() >= 2 && path.size() > best.size()) best = path;
            if (static_cast<int>(best.size()) == n - s) return;
            Mask cand = reach_within(out, v, free) & ~(Mask{1} << v);
            if (path.size() + std::popcount(cand) <= best.size()) return;
            for (Mask m = out[v] & free; m; m &= m - 1) {
                int w = std::countr_zero(m);
                path.push_back(w);
                dfs(w, free & ~(Mask{1} << w));
                path.pop_back();
                if (meter.exhausted() || static_cast<int>(best.size()) == n - s) return;
            }
        };
        path = {s};
        dfs(s, fwd & allowed);
        if (meter.exhausted()) throw BudgetExceeded("longest cycle search exceeded its budget");
    }
    if (best.empty()) return std::nullopt;
    return best;
}

std::vector<int> longest_dipath(const Digraph& d, const SearchBudget& budget) {
    require_small(d, "longest_dipath");
    const int n = d.order();
    if (n == 0) return {};
    auto out = out_masks(d);
    Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    BudgetMeter meter(budget);
    std::vector<int> best, path;
    std::function<void(int, Mask)> dfs = [&](int v, Mask free) {
        if (!meter.tick()) return;
        if (path.size() > best.size()) best = path;
        if (static_cast<int>(best.size()) == n) return;
        Mask cand = reach_within(out, v, free) & ~(Mask{1} << v);
        if (path.size() + std::popcount(cand) <= best.size()) return;
        for (Mask m = out[v] & free; m; m &= m - 1) {
            int w = std::countr_zero(m);
            path.push_back(w);
            dfs(w, free & ~(Mask{1} << w));
            path.pop_back();
            if (meter.exhausted() || static_cast<int>(best.size()) == n) return;
        }
    };
    for (int s = 0; s < n && static_cast<int>(best.size()) < n; ++s) {
        path = {s};
        dfs(s, all & ~(Mask{1} << s));
        if (meter.exhausted()) throw BudgetExceeded("longest dipath search exceeded its budget");
    }
    return best;
}

GallaiRoyResult gallai_roy(const Digraph& d, const SearchBudget& budget) {
    const int n = d.order();
    GallaiRoyResult r;
    r.dipath = longest_dipath(d, budget);
    // Maximal acyclic spanning subdigraph containing the longest dipath;
    // colour = longest path in it ending at the vertex.
    std::vector<std::vector<int>> out(n);
    auto reaches = [&](int from, int to) {
        std::vector<char> seen(n, 0);
        std::vector<int> st{from};
        seen[from] = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            if (x == to) return true;
            for (int y : out[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    st.push_back(y);
                }
        }
        return false;
    };
    std::vector<Arc> kept;
    for (std::size_t i = 0; i + 1 < r.dipath.size(); ++i) {
        out[r.dipath[i]].push_back(r.dipath[i + 1]);
        kept.emplace_back(r.dipath[i], r.dipath[i + 1]);
    }
    for (auto [u, v] : d.arcs()) {
        if (std::find(out[u].begin(), out[u].end(), v) != out[u].end()) continue;
        if (reaches(v, u)) continue;
        out[u].push_back(v);
        kept.emplace_back(u, v);
    }
    std::vector<int> indeg(n, 0), label(n, 0), order;
    for (auto [u, v] : kept) ++indeg[v];
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : out[order[i]]) {
            label[w] = std::max(label[w], label[order[i]] + 1);
            if (--indeg[w] == 0) order.push_back(w);
        }
    r.coloring.color = label;
    r.coloring.palette_size = static_cast<int>(r.dipath.size());
    return r;
}

// ------------------------------------------------------------ block counts

int count_blocks(const std::vector<Dir>& dirs) {
    if (dirs.empty()) return 0;
    int changes = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        if (dirs[i] != dirs[(i + 1) % dirs.size()]) ++changes;
    return changes == 0 ? 1 : changes;
}

std::optional<OrientedCycle> cycle_with_at_most_blocks(const Digraph& d, int max_blocks, const SearchBudget& budget) {
    const int n = d.order();
    if (max_blocks < 1) return std::nullopt;
    BudgetMeter meter(budget);
    std::vector<char> used(n, 0);
    std::vector<int> walk;
    std::vector<Dir> dirs;
    std::optional<OrientedCycle> found;
    int s = 0;
    // blocks = number of maximal runs in dirs so far.
    std::function<void(int, int)> dfs = [&](int v, int blocks) {
        if (!meter.tick()) return;
        for (int pass = 0; pass < 2 && !found; ++pass) {
            Dir dir = pass == 0 ? Dir::Forward : Dir::Backward;
            const auto& nb = pass == 0 ? d.out(v) : d.in(v);
            int nb_blocks = dirs.empty() ? 1 : blocks + (dir != dirs.back() ? 1 : 0);
            if (!dirs.empty()) {
                if (nb_blocks > max_blocks + 1) continue;
                if (nb_blocks == max_blocks + 1 && dir != dirs.front()) continue;
            }
            for (int w : nb) {
                if (found || meter.exhausted()) return;
                if (w == s && walk.size() >= 2) {
                    if (walk.size() == 2 && dir != dirs.front()) continue;  // same arc twice
                    dirs.push_back(dir);
                    int b = count_blocks(dirs);
                    if (b <= max_blocks) {
                        walk.push_back(s);
                        found = OrientedCycle{walk, dirs, b};
                        walk.pop_back();
                    }
                    dirs.pop_back();
                    continue;
                }
                if (w <= s || used[w]) continue;
                used[w] = 1;
                walk.push_back(w);
                dirs.push_back(dir);
                dfs(w, nb_blocks);
                dirs.pop_back();
                walk.pop_back();
                used[w] = 0;
            }
        }
    };
    for (s = 0; s < n && !found; ++s) {
        walk = {s};
        dirs.clear();
        used.assign(n, 0);
        used[s] = 1;
        dfs(s, 0);
        if (meter.exhausted()) throw BudgetExceeded("block-limited cycle search exceeded its budget");
    }
    return found;
}

std::optional<int> min_blocks_over_cycles(const Digraph& d, const SearchBudget& budget) {
    // A digon is a directed 2-cycle, so it counts even on a forest.
    if (cycle_with_at_most_blocks(d, 1, budget)) return 1;
    if (is_forest_underlying(d)) return std::nullopt;
    for (int b = 2; b <= d.order() + 1; b += 2)
        if (auto c = cycle_with_at_most_blocks(d, b, budget)) return c->blocks;
    throw BudgetExceeded("no cycle found although the underlying graph is not a forest");
}

}  // namespace cw
