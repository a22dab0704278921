#include <algorithm>
#include <deque>
#include <set>

#include "cyclewright/handles.hpp"
#include "cyclewright/oracles.hpp"

namespace cw {

std::vector<Arc> HandleDecomposition::arcs_up_to(int i) const {
    std::vector<Arc> a;
    for (int h = 0; h < i && h < count(); ++h)
        for (std::size_t j = 0; j + 1 < handles[h].size(); ++j) a.emplace_back(handles[h][j], handles[h][j + 1]);
    return a;
}

std::vector<char> HandleDecomposition::vertices_up_to(int i, int n) const {
    std::vector<char> in(n, 0);
    if (start >= 0) in[start] = 1;
    for (int h = 0; h < i && h < count(); ++h)
        for (int v : handles[h]) in[v] = 1;
    return in;
}

int HandleDecomposition::last_nontrivial() const {
    for (int i = count() - 1; i >= 0; --i)
        if (handles[i].size() > 2) return i;
    return -1;
}

bool is_handle_decomposition(const Digraph& d, const HandleDecomposition& hd, bool nice) {
    const int n = d.order();
    if (n == 0) return hd.handles.empty();
    if (hd.start < 0 || hd.start >= n) return false;
    std::vector<char> present(n, 0);
    present[hd.start] = 1;
    std::set<Arc> used;
    for (int i = 0; i < hd.count(); ++i) {
        const auto& h = hd.handles[i];
        if (h.size() < 2) return false;
        if (!present[h.front()] || !present[h.back()]) return false;
        if (i == 0 && (h.front() != hd.start || h.back() != hd.start)) return false;
        if (nice && i > 0 && h.front() == h.back()) return false;
        for (std::size_t j = 1; j + 1 < h.size(); ++j) {
            if (present[h[j]]) return false;
            present[h[j]] = 1;
        }
        for (std::size_t j = 0; j + 1 < h.size(); ++j) {
            if (!d.has_arc(h[j], h[j + 1])) return false;
            if (!used.insert({h[j], h[j + 1]}).second) return false;
        }
    }
    if (std::count(present.begin(), present.end(), 1) != n) return false;
    if (used.size() != d.size()) return false;
    return hd.count() == static_cast<int>(d.size()) - n + 1;
}

namespace {

// Ear growing. With `nice`, handles must end at a vertex other than their start.
HandleDecomposition grow(const Digraph& d, const std::vector<int>& cycle, bool nice) {
    const int n = d.order();
    HandleDecomposition hd;
    hd.start = cycle.front();
    std::vector<char> in_s(n, 0);
    std::vector<std::uint8_t> used(static_cast<std::size_t>(n) * n, 0);
    auto mark = [&](const std::vector<int>& h) {
        for (int v : h) in_s[v] = 1;
        for (std::size_t j = 0; j + 1 < h.size(); ++j) used[static_cast<std::size_t>(h[j]) * n + h[j + 1]] = 1;
        hd.handles.push_back(h);
    };
    std::vector<int> first = cycle;
    first.push_back(cycle.front());
    mark(first);
    int covered = static_cast<int>(cycle.size());
    while (covered < n) {
        std::vector<int> best;
        for (int s = 0; s < n; ++s) {
            if (!in_s[s]) continue;
            for (int v : d.out(s)) {
                if (in_s[v]) continue;
                std::vector<int> pred(n, -2), dist(n, -1);
                std::deque<int> q{v};
                pred[v] = -1;
                dist[v] = 0;
                while (!q.empty()) {
                    int x = q.front();
                    q.pop_front();
                    for (int t : d.out(x)) {
                        if (in_s[t]) {
                            if (nice && t == s) continue;
                            if (static_cast<int>(best.size()) < dist[x] + 3) {
                                best.clear();
                                for (int y = x; y != -1; y = pred[y]) best.push_back(y);
                                best.push_back(s);
                                std::reverse(best.begin(), best.end());
                                best.push_back(t);
                            }
                        } else if (pred[t] == -2) {
                            pred[t] = x;
                            dist[t] = dist[x] + 1;
                            q.push_back(t);
                        }
                    }
                }
            }
        }
        if (best.empty()) throw PreconditionError(nice ? "no nice handle: digraph is not robust" : "digraph is not strong");
        covered += static_cast<int>(best.size()) - 2;
        mark(best);
    }
    for (auto [u, v] : d.arcs())
        if (!used[static_cast<std::size_t>(u) * n + v]) mark({u, v});
    return hd;
}

}  // namespace

HandleDecomposition handle_decomposition(const Digraph& d) {
    if (!is_strong(d)) throw PreconditionError("handle decomposition needs a strong digraph");
    if (d.order() == 0) throw PreconditionError("empty digraph");
    if (d.order() == 1) return {0, {}};
    // Shortest dicycle through vertex 0.
    std::vector<int> best;
    for (int w : d.in(0)) {
        auto p = shortest_dipath(d, 0, w);
        if (!p.empty() && (best.empty() || p.size() < best.size())) best = p;
    }
    return grow(d, best, false);
}

HandleDecomposition nice_decomposition_from_cycle(const Digraph& d, const std::vector<int>& cycle) {
    if (!is_robust(d)) throw PreconditionError("nice handle decomposition needs a robust digraph");
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()])) throw PreconditionError("not a dicycle of the digraph");
    return grow(d, cycle, true);
}

int apply_exchange_rewrites(HandleDecomposition& hd) {
    int rewrites = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 1; j < hd.count() && !changed; ++j) {
            auto& h = hd.handles[j];
            if (h.size() <= 2 || h.front() == h.back()) continue;
            int s = h.front(), t = h.back();
            for (int r = 0; r < j && !changed; ++r) {
                auto& g = hd.handles[r];
                for (std::size_t x = 0; x + 1 < g.size(); ++x) {
                    if (g[x] != s || g[x + 1] != t) continue;
                    std::vector<int> spliced(g.begin(), g.begin() + x);
                    spliced.insert(spliced.end(), h.begin(), h.end());
                    spliced.insert(spliced.end(), g.begin() + x + 2, g.end());
                    g = std::move(spliced);
                    h = {s, t};
                    ++rewrites;
                    changed = true;
                    break;
                }
            }
        }
    }
    // Trivial handles after the nontrivial ones keep every D_i well formed.
    std::stable_partition(hd.handles.begin() + (hd.handles.empty() ? 0 : 1), hd.handles.end(),
                          [](const std::vector<int>& h) { return h.size() > 2; });
    return rewrites;
}

HandleDecomposition nice_handle_decomposition(const Digraph& d) {
    if (!is_robust(d)) throw PreconditionError("nice handle decomposition needs a robust digraph");
    auto c = longest_directed_cycle(d);
    if (!c) throw PreconditionError("acyclic digraph");
    HandleDecomposition hd = grow(d, *c, true);
    apply_exchange_rewrites(hd);
    return hd;
}

}  // namespace cw
