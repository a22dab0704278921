// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Digraph container.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "cyclewright/digraph.hpp"

namespace brute {

using cw::Digraph;
using cw::Dir;

inline bool proper(const Digraph& d, const std::vector<int>& col) {
    for (auto [u, v] : d.arcs())
        if (col[u] == col[v]) return false;
    return true;
}

/// Tries every assignment of k colours, k = 1, 2, ...
inline int chromatic(const Digraph& d) {
    const int n = d.order();
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> col(n, 0);
        while (true) {
            if (proper(d, col)) return k;
            int i = 0;
            while (i < n && ++col[i] == k) col[i++] = 0;
            if (i == n) break;
        }
    }
}

/// Every oriented cycle of the underlying multigraph, reported as a cyclic
/// direction sequence. Digons give a 2-cycle only through two distinct arcs.
inline void for_each_cycle(const Digraph& d, const std::function<void(const std::vector<int>&, const std::vector<Dir>&)>& f) {
    const int n = d.order();
    std::vector<int> walk;
    std::vector<Dir> dirs;
    std::vector<char> used(n, 0);
    std::function<void(int, int)> rec = [&](int s, int v) {
        for (int w = 0; w < n; ++w) {
            for (Dir dir : {Dir::Forward, Dir::Backward}) {
                bool arc = dir == Dir::Forward ? d.has_arc(v, w) : d.has_arc(w, v);
                if (!arc) continue;
                if (w == s && walk.size() >= 2) {
                    if (walk.size() == 2 && dir != dirs[0]) continue;
                    dirs.push_back(dir);
                    f(walk, dirs);
                    dirs.pop_back();
                    continue;
                }
                if (w <= s || used[w]) continue;
                used[w] = 1;
                walk.push_back(w);
                dirs.push_back(dir);
                rec(s, w);
                dirs.pop_back();
                walk.pop_back();
                used[w] = 0;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        walk = {s};
        used.assign(n, 0);
        used[s] = 1;
        rec(s, s);
    }
}

/// Runs of a cyclic direction sequence, starting right after a change.
inline std::vector<std::pair<Dir, int>> runs(const std::vector<Dir>& dirs) {
    const int m = static_cast<int>(dirs.size());
    int start = -1;
    for (int i = 0; i < m; ++i)
        if (dirs[i] != dirs[(i + m - 1) % m]) {
            start = i;
            break;
        }
    if (start < 0) return {{dirs[0], m}};
    std::vector<std::pair<Dir, int>> r;
    for (int i = 0; i < m; ++i) {
        Dir x = dirs[(start + i) % m];
        if (!r.empty() && r.back().first == x)
            ++r.back().second;
        else
            r.push_back({x, 1});
    }
    return r;
}

inline bool dominates(const std::vector<std::pair<Dir, int>>& cyc, const cw::OrientedCycleSpec& spec) {
    const std::size_t m = spec.blocks.size();
    if (cyc.size() != m) return false;
    if (m == 1) return cyc[0].second >= spec.blocks[0].length;
    auto flip = [](Dir x) { return x == Dir::Forward ? Dir::Backward : Dir::Forward; };
    for (std::size_t r = 0; r < m; ++r) {
        bool a = true, b = true;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& c = cyc[(r + i) % m];
            if (c.first != spec.blocks[i].dir || c.second < spec.blocks[i].length) a = false;
            const auto& c2 = cyc[(r + m - i) % m];
            if (flip(c2.first) != spec.blocks[i].dir || c2.second < spec.blocks[i].length) b = false;
        }
        if (a || b) return true;
    }
    return false;
}

inline bool contains_subdivision(const Digraph& d, const cw::OrientedCycleSpec& spec) {
    bool hit = false;
    for_each_cycle(d, [&](const std::vector<int>&, const std::vector<Dir>& dirs) {
        if (!hit && dominates(runs(dirs), spec)) hit = true;
    });
    return hit;
}

inline int min_blocks(const Digraph& d) {
    int best = -1;
    for_each_cycle(d, [&](const std::vector<int>&, const std::vector<Dir>& dirs) {
        int b = static_cast<int>(runs(dirs).size());
        if (best < 0 || b < best) best = b;
    });
    return best;
}

/// Over all vertex permutations.
inline int longest_dipath_len(const Digraph& d) {
    const int n = d.order();
    int best = 0;
    std::function<void(int, std::vector<char>&, int)> rec = [&](int v, std::vector<char>& used, int len) {
        best = std::max(best, len);
        for (int w : d.out(v))
            if (!used[w]) {
                used[w] = 1;
                rec(w, used, len + 1);
                used[w] = 0;
            }
    };
    for (int s = 0; s < n; ++s) {
        std::vector<char> used(n, 0);
        used[s] = 1;
        rec(s, used, 0);
    }
    return best;
}

inline int longest_cycle_len(const Digraph& d) {
    int best = 0;
    for_each_cycle(d, [&](const std::vector<int>& walk, const std::vector<Dir>& dirs) {
        if (std::all_of(dirs.begin(), dirs.end(), [&](Dir x) { return x == dirs[0]; }))
            best = std::max(best, static_cast<int>(walk.size()));
    });
    return best;
}

/// Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const Digraph& d) {
    const int n = d.order(), inf = 1 << 20;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) dist[v][v] = 0;
    for (auto [u, v] : d.arcs()) dist[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    for (auto& row : dist)
        for (int& x : row)
            if (x >= inf) x = -1;
    return dist;
}

inline bool strong(const Digraph& d) {
    auto dist = distances(d);
    for (auto& row : dist)
        for (int x : row)
            if (x < 0) return false;
    return true;
}

inline Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<cw::Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

inline Digraph random_strong(int n, double p, std::mt19937_64& rng) {
    while (true) {
        Digraph d = random_digraph(n, p, rng);
        if (strong(d)) return d;
    }
}

inline Digraph cycle(int n) {
    std::vector<cw::Arc> a;
    for (int i = 0; i < n; ++i) a.emplace_back(i, (i + 1) % n);
    return Digraph(n, a);
}

inline Digraph complete(int n) {
    std::vector<cw::Arc> a;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) a.emplace_back(u, v);
    return Digraph(n, a);
}

inline Digraph permuted(const Digraph& d, const std::vector<int>& perm) {
    std::vector<cw::Arc> a;
    for (auto [u, v] : d.arcs()) a.emplace_back(perm[u], perm[v]);
    return Digraph(d.order(), a);
}

}  // namespace brute
