#include "cyclewright/constructions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cyclewright/certs.hpp"

namespace cw {

void Hypergraph::normalize() {
    if (ground_size < 0) throw ImproperInput("hypergraph: negative ground size");
    std::set<std::vector<int>> seen;
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= ground_size) throw ImproperInput("hypergraph: vertex out of range");
            if (i && e[i] == e[i - 1]) throw ImproperInput("hypergraph: vertex repeated inside an edge");
        }
        if (!seen.insert(e).second) throw ImproperInput("hypergraph: repeated edge");
    }
}

std::optional<int> hypergraph_girth(const Hypergraph& h) {
    // Shortest cycle of the incidence graph; a hypergraph cycle of length l
    // is an incidence cycle of length 2l.
    const int n = h.ground_size, m = static_cast<int>(h.edges.size());
    std::vector<std::vector<int>> adj(n + m);
    for (int e = 0; e < m; ++e)
        for (int v : h.edges[e]) {
            adj[v].push_back(n + e);
            adj[n + e].push_back(v);
        }
    int best = 1 << 30;
    std::vector<int> dist(n + m), parent(n + m);
    for (int r = 0; r < n + m; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[r] = 0;
        parent[r] = -1;
        std::deque<int> q{r};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (2 * dist[x] + 1 >= best) break;
            for (int y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == 1 << 30) return std::nullopt;
    return best / 2;
}

namespace {

/// Backtracking over domains with forward checking on nearly assigned edges.
class WeakColorer {
public:
    WeakColorer(const Hypergraph& h, int c, BudgetMeter& meter) : h_(h), c_(c), meter_(meter) {
        const int n = h.ground_size;
        inc_.resize(n);
        for (int e = 0; e < static_cast<int>(h.edges.size()); ++e)
            for (int v : h.edges[e]) inc_[v].push_back(e);
        col_.assign(n, -1);
        dom_.assign(static_cast<std::size_t>(n) * c, 1);
        size_.assign(n, c);
    }

    std::optional<std::vector<int>> run() {
        for (const auto& e : h_.edges)
            if (e.size() < 2) return std::nullopt;
        if (!rec(0, -1)) {
            if (meter_.exhausted()) throw BudgetExceeded("weak colouring search exceeded its budget");
            return std::nullopt;
        }
        return col_;
    }

private:
    bool rec(int assigned, int max_used) {
        if (!meter_.tick()) return false;
        const int n = h_.ground_size;
        if (assigned == n) return true;
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (col_[u] >= 0) continue;
            if (v < 0 || size_[u] < size_[v] || (size_[u] == size_[v] && inc_[u].size() > inc_[v].size()))
                v = u;
        }
        const int top = std::min(c_ - 1, max_used + 1);
        for (int x = 0; x <= top; ++x) {
            if (!allowed(v, x)) continue;
            const std::size_t mark = trail_.size();
            col_[v] = x;
            if (propagate(v) && rec(assigned + 1, std::max(max_used, x))) return true;
            col_[v] = -1;
            while (trail_.size() > mark) {
                auto [u, y] = trail_.back();
                dom_[static_cast<std::size_t>(u) * c_ + y] = 1;
                ++size_[u];
                trail_.pop_back();
            }
            if (meter_.exhausted()) return false;
        }
        return false;
    }

    bool propagate(int v) {
        for (int e : inc_[v]) {
            int free = -1, nfree = 0;
            bool mono = true;
            for (int u : h_.edges[e]) {
                if (col_[u] < 0) {
                    free = u;
                    ++nfree;
                } else if (col_[u] != col_[v]) {
                    mono = false;
                }
            }
            if (!mono) continue;
            if (nfree == 0) return false;
            if (nfree == 1 && allowed(free, col_[v])) {
                trail_.push_back({free, col_[v]});
                dom_[static_cast<std::size_t>(free) * c_ + col_[v]] = 0;
                if (--size_[free] == 0) return false;
            }
        }
        return true;
    }

    bool allowed(int v, int x) const { return dom_[static_cast<std::size_t>(v) * c_ + x]; }

    const Hypergraph& h_;
    int c_;
    BudgetMeter& meter_;
    std::vector<std::vector<int>> inc_;
    std::vector<int> col_;
    std::vector<char> dom_;
    std::vector<int> size_;
    std::vector<std::pair<int, int>> trail_;
};

std::optional<std::vector<int>> weak_coloring_with(const Hypergraph& h, int c, BudgetMeter& meter) {
    if (c < 1) return h.ground_size == 0 ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
    return WeakColorer(h, c, meter).run();
}

}  // namespace

std::optional<std::vector<int>> weak_coloring(const Hypergraph& h, int c, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    return weak_coloring_with(h, c, meter);
}

int weak_chromatic_number(const Hypergraph& h, const SearchBudget& budget) {
    for (const auto& e : h.edges)
        if (e.size() < 2) throw PreconditionError("weak_chromatic_number: an edge has fewer than 2 vertices");
    BudgetMeter meter(budget);
    for (int c = 1;; ++c)
        if (weak_coloring_with(h, c, meter)) return c;
}

Hypergraph search_hypergraph(int uniformity, int g, int c, const SearchBudget& budget) {
    if (uniformity < 2 || c < 1 || g < 0)
        throw InfeasibleParameters("search_hypergraph: need uniformity >= 2, c >= 1, g >= 0");
    BudgetMeter meter(budget);
    std::mt19937_64 rng(budget.seed);
    Hypergraph h;
    h.ground_size = uniformity;
    std::vector<std::vector<int>> inc(h.ground_size);
    std::set<std::vector<int>> present;

    // Vertices at hyper-distance < g from v.
    auto near = [&](int v) {
        std::vector<int> dist(h.ground_size, -1);
        std::vector<int> out{v};
        dist[v] = 0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            int x = out[i];
            if (dist[x] + 1 >= g) continue;
            for (int e : inc[x])
                for (int y : h.edges[e])
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        out.push_back(y);
                    }
        }
        return dist;
    };

    while (true) {
        if (meter.exhausted()) throw BudgetExceeded("search_hypergraph exceeded its budget");
        auto col = weak_coloring_with(h, c, meter);
        if (!col) break;
        if (!meter.tick()) throw BudgetExceeded("search_hypergraph exceeded its budget");

        // A new edge monochromatic under col that keeps the girth above g.
        std::vector<std::vector<int>> classes(c);
        for (int v = 0; v < h.ground_size; ++v) classes[(*col)[v]].push_back(v);
        std::vector<int> order(c);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return classes[a].size() > classes[b].size(); });
        std::vector<int> best;
        for (int x : order) {
            for (int attempt = 0; attempt < 8 && static_cast<int>(best.size()) < uniformity; ++attempt) {
                std::vector<int> cls = classes[x];
                std::shuffle(cls.begin(), cls.end(), rng);
                std::vector<int> pick;
                std::vector<char> blocked(h.ground_size, 0);
                for (int v : cls) {
                    if (blocked[v]) continue;
                    pick.push_back(v);
                    if (static_cast<int>(pick.size()) == uniformity) break;
                    auto dist = near(v);
                    for (int u = 0; u < h.ground_size; ++u)
                        if (dist[u] >= 0) blocked[u] = 1;
                }
                std::sort(pick.begin(), pick.end());
                if (static_cast<int>(pick.size()) == uniformity && present.count(pick)) pick.pop_back();
                if (pick.size() > best.size()) best = pick;
            }
            if (static_cast<int>(best.size()) == uniformity) break;
        }
        while (static_cast<int>(best.size()) < uniformity) {
            best.push_back(h.ground_size++);
            inc.emplace_back();
        }
        std::sort(best.begin(), best.end());
        const int id = static_cast<int>(h.edges.size());
        for (int v : best) inc[v].push_back(id);
        present.insert(best);
        h.edges.push_back(best);
    }
    auto girth = hypergraph_girth(h);
    if (girth && *girth <= g)
        throw LemmaViolation("hypergraph-search", "girth " + std::to_string(*girth) + " not above " + std::to_string(g),
                             format_hypergraph(h));
    return h;
}

std::vector<std::vector<int>> enumerate_colorings(const Digraph& d, int c, const SearchBudget& budget) {
    const int n = d.order();
    BudgetMeter meter(budget);
    std::vector<std::vector<int>> out;
    std::vector<int> col(n, -1);
    std::function<void(int)> rec = [&](int v) {
        if (!meter.tick()) throw BudgetExceeded("enumerate_colorings exceeded its budget");
        if (v == n) {
            out.push_back(col);
            return;
        }
        for (int x = 0; x < c; ++x) {
            bool ok = true;
            for (int w : d.neighbours(v))
                if (w < v && col[w] == x) ok = false;
            if (!ok) continue;
            col[v] = x;
            rec(v + 1);
        }
        col[v] = -1;
    };
    if (c >= 1 || n == 0) rec(0);
    return out;
}

namespace {

bool acyclic(const Digraph& d) { return static_cast<int>(strong_components(d).size()) == d.order(); }

/// D_{c+1} from D_c, its colourings and a (c*p)-uniform hypergraph.
Digraph blocks_step(const Digraph& dc, int c, const std::vector<std::vector<int>>& cols, const Hypergraph& h) {
    const int nc = dc.order(), p = static_cast<int>(cols.size());
    std::vector<Arc> arcs;
    for (int j = 0; j < h.ground_size; ++j)
        for (auto [u, v] : dc.arcs()) arcs.push_back({j * nc + u, j * nc + v});
    int next = h.ground_size * nc;
    for (const auto& s : h.edges) {
        if (static_cast<int>(s.size()) != c * p) throw InfeasibleParameters("blocks: hyperedge of the wrong size");
        for (int i = 0; i < p; ++i) {
            const int w = next++;
            for (int t = 0; t < c; ++t) {
                const int copy = s[i * c + t];
                auto it = std::find(cols[i].begin(), cols[i].end(), t);
                if (it == cols[i].end())
                    throw InfeasibleParameters("blocks: a colouring misses a colour class");
                arcs.push_back({copy * nc + static_cast<int>(it - cols[i].begin()), w});
            }
        }
    }
    return Digraph(next, arcs);
}

}  // namespace

Digraph build_blocks_digraph(int b, int c, const SearchBudget& budget) {
    if (b < 1 || c < 2) throw InfeasibleParameters("build_blocks_digraph: need b >= 1 and c >= 2");
    if (c > 3)
        throw InfeasibleParameters("build_blocks_digraph: c > 3 needs a hypergraph far beyond desk scale");
    Digraph d(2, {{0, 1}});
    for (int cur = 2; cur < c; ++cur) {
        auto cols = enumerate_colorings(d, cur, budget);
        const int p = static_cast<int>(cols.size());
        // girth > b/2, weak chromatic number > p.
        Hypergraph h = search_hypergraph(cur * p, b / 2, p, budget);
        d = blocks_step(d, cur, cols, h);
    }
    if (!acyclic(d)) throw LemmaViolation("blocks", "construction has a directed cycle", format_digraph(d));
    if (color_with_at_most(d, c - 1, budget))
        throw LemmaViolation("blocks", "construction is " + std::to_string(c - 1) + "-colourable", format_digraph(d));
    if (cycle_with_at_most_blocks(d, b, budget))
        throw LemmaViolation("blocks", "construction has a cycle with at most " + std::to_string(b) + " blocks",
                             format_digraph(d));
    return d;
}

SubdivisionWitness embed_cycle_in_k_strong(const Digraph& d, const OrientedCycleSpec& spec) {
    spec.validate();
    const int n = spec.order();
    if (n < 2 || !is_k_strong(d, n - 1))
        throw PreconditionError("embed_cycle_in_k_strong: digraph is not " + std::to_string(n - 1) + "-strong");

    // Edge i joins cycle vertices i and i+1; block id per edge.
    std::vector<Dir> dirs;
    std::vector<int> block_of;
    const int m = static_cast<int>(spec.blocks.size());
    for (int b = 0; b < m; ++b)
        for (int t = 0; t < spec.blocks[b].length; ++t) {
            dirs.push_back(spec.blocks[b].dir);
            block_of.push_back(b);
        }
    // Rotate so the closing edge ends a backward block; a dicycle has none,
    // so it is walked in reverse instead.
    int shift = 0;
    bool reverse = true;
    for (int i = 0; i < n; ++i)
        if (dirs[i] == Dir::Backward && dirs[(i + 1) % n] != Dir::Backward) {
            shift = (i + 1) % n;
            reverse = false;
            break;
        }
    std::vector<Dir> step(n);
    for (int i = 0; i < n; ++i)
        step[i] = reverse ? Dir::Backward : dirs[(i + shift) % n];

    std::vector<int> x{0};
    std::vector<char> used(d.order(), 0);
    used[0] = 1;
    for (int i = 1; i < n; ++i) {
        const auto& cand = step[i - 1] == Dir::Forward ? d.out(x.back()) : d.in(x.back());
        auto it = std::find_if(cand.begin(), cand.end(), [&](int v) { return !used[v]; });
        if (it == cand.end()) throw PreconditionError("embed_cycle_in_k_strong: greedy pick ran out of neighbours");
        used[*it] = 1;
        x.push_back(*it);
    }
    std::vector<char> removed(d.order(), 0);
    for (int i = 1; i + 1 < n; ++i) removed[x[i]] = 1;
    // C(1,1): the closing dipath may not reuse the arc x_1 -> x_2.
    std::vector<int> closing = n == 2 && m == 2 ? shortest_dipath(d.without_arcs({{x[0], x[1]}}), x[0], x[1], removed)
                                                : shortest_dipath(d, x.front(), x.back(), removed);
    if (closing.empty()) throw PreconditionError("embed_cycle_in_k_strong: no closing dipath");

    // Closed walk x_1 .. x_n then back to x_1 against the closing dipath.
    std::vector<int> walk = x;
    for (int i = static_cast<int>(closing.size()) - 2; i >= 0; --i) walk.push_back(closing[i]);
    std::vector<Dir> wdirs(step.begin(), step.end() - 1);
    wdirs.resize(walk.size() - 1, Dir::Backward);

    if (reverse) {
        if (spec.blocks[0].dir == Dir::Forward) std::reverse(walk.begin(), walk.end());
        return SubdivisionWitness{spec, {walk.front()}, {walk}};
    }
    SubdivisionWitness w{spec, std::vector<int>(m), std::vector<std::vector<int>>(m)};
    int b = block_of[shift];
    std::vector<int> cur{walk[0]};
    w.branch[b] = walk[0];
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        cur.push_back(walk[i + 1]);
        const bool end = i + 2 == walk.size() || wdirs[i + 1] != wdirs[i];
        if (end) {
            w.paths[b] = cur;
            b = (b + 1) % m;
            if (i + 2 < walk.size()) w.branch[b] = walk[i + 1];
            cur = {walk[i + 1]};
        }
    }
    if (!verify_subdivision(d, w))
        throw LemmaViolation("embed", "greedy embedding does not verify", format_digraph(d));
    return w;
}

Digraph transitive_tournament(int n) {
    if (n < 1) throw InfeasibleParameters("transitive_tournament: n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

Digraph directed_cycle(int n) {
    if (n < 2) throw InfeasibleParameters("directed_cycle: n >= 2");
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
    return Digraph(n, arcs);
}

Digraph complete_digraph(int n) {
    if (n < 1) throw InfeasibleParameters("complete_digraph: n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

Digraph random_tournament(int n, std::uint64_t seed) {
    if (n < 1) throw InfeasibleParameters("random_tournament: n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) arcs.push_back(rng() & 1 ? Arc{u, v} : Arc{v, u});
    return Digraph(n, arcs);
}

Digraph random_strong_digraph(int n, int m, std::uint64_t seed) {
    if (n < 1) throw InfeasibleParameters("random_strong_digraph: n >= 1");
    const long long all = 1LL * n * (n - 1);
    if (n == 1 ? m != 0 : (m < n || m > all))
        throw InfeasibleParameters("random_strong_digraph: need n <= m <= n(n-1)");
    std::mt19937_64 rng(seed);
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.push_back({u, v});
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        Digraph d(n, std::vector<Arc>(pairs.begin(), pairs.begin() + m));
        if (is_strong(d)) return d;
    }
    // Sparse m rarely hits a strong digraph; plant a random Hamiltonian
    // dicycle and fill the rest uniformly.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<Arc> chosen;
    for (int i = 0; i < n; ++i) chosen.insert({perm[i], perm[(i + 1) % n]});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const Arc& a : pairs) {
        if (static_cast<int>(chosen.size()) == m) break;
        chosen.insert(a);
    }
    return Digraph(n, std::vector<Arc>(chosen.begin(), chosen.end()));
}

namespace {

Digraph chorded_cycle(int n, double density, std::uint64_t seed, const std::function<bool(int, int)>& allowed) {
    if (n < 2) throw InfeasibleParameters("chorded cycle: n >= 2");
    if (!(density >= 0.0 && density <= 1.0)) throw InfeasibleParameters("chorded cycle: density in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    std::set<Arc> arcs;
    for (int v = 0; v < n; ++v) arcs.insert({v, (v + 1) % n});
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || arcs.count({u, v}) || arcs.count({v, u})) continue;
            if (allowed(u, v) && coin(rng)) arcs.insert({u, v});
        }
    return Digraph(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

}  // namespace

Digraph hamiltonian_with_bounded_span(int n, int max_span, double density, std::uint64_t seed) {
    return chorded_cycle(n, density, seed, [&](int u, int v) {
        const int f = ((v - u) % n + n) % n;
        return std::min(f, n - f) <= max_span;
    });
}

Digraph hamiltonian_with_bounded_forward(int n, int max_forward, double density, std::uint64_t seed) {
    return chorded_cycle(n, density, seed, [&](int u, int v) { return ((v - u) % n + n) % n <= max_forward; });
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "g " << h.ground_size << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

Hypergraph parse_hypergraph(std::istream& in) {
    Hypergraph h;
    h.ground_size = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        std::istringstream ls(line);
        if (h.ground_size < 0) {
            std::string tag;
            if (!(ls >> tag >> h.ground_size) || tag != "g" || h.ground_size < 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'g <N>' header");
            continue;
        }
        std::vector<int> e;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                e.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw ParseError("");
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
            }
        }
        h.edges.push_back(std::move(e));
    }
    if (h.ground_size < 0) throw ParseError("missing 'g <N>' header");
    try {
        h.normalize();
    } catch (const ImproperInput& e) {
        throw ParseError(e.what());
    }
    return h;
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

}  // namespace cw
