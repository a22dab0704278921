#include <algorithm>
#include <map>
#include <set>

#include "cyclewright/digraph.hpp"

namespace cw {

namespace {

// 0 none, 1 out only, 2 in only, 3 digon.
int arc_type(const Digraph& d, int v, int w) { return (d.has_arc(v, w) ? 1 : 0) | (d.has_arc(w, v) ? 2 : 0); }

// Colour refinement to an equitable partition; colours are ranks of
// isomorphism-invariant signatures so the numbering itself is canonical.
std::vector<int> refine(const Digraph& d, std::vector<int> colors) {
    const int n = d.order();
    int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colors[v]);
            std::vector<int> nb;
            for (int w : d.neighbours(v)) nb.push_back(colors[w] * 4 + arc_type(d, v, w));
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        int now = static_cast<int>(distinct.size());
        if (now == classes) return colors;
        classes = now;
    }
}

std::string code_for(const Digraph& d, const std::vector<int>& pos) {
    const int n = d.order();
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[pos[v]] = v;
    std::string code(static_cast<std::size_t>(n) * n, '0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d.has_arc(at[i], at[j])) code[static_cast<std::size_t>(i) * n + j] = '1';
    return code;
}

void search(const Digraph& d, const std::vector<int>& colors, std::string& best, std::vector<int>& best_pos) {
    const int n = d.order();
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[colors[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (auto& [c, members] : cells)
        if (members.size() > 1) {
            target = &members;
            break;
        }
    if (!target) {
        std::string c = code_for(d, colors);
        if (best.empty() || c < best) {
            best = c;
            best_pos = colors;
        }
        return;
    }
    for (int v : *target) {
        std::vector<int> next(n);
        for (int u = 0; u < n; ++u) next[u] = 2 * colors[u] + (u == v ? 0 : 1);
        search(d, refine(d, next), best, best_pos);
    }
}

}  // namespace

Digraph canonical_form(const Digraph& d) {
    const int n = d.order();
    if (n == 0) return d;
    std::string best;
    std::vector<int> pos;
    search(d, refine(d, std::vector<int>(n, 0)), best, pos);
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs()) arcs.emplace_back(pos[u], pos[v]);
    return Digraph(n, std::move(arcs));
}

std::string canonical_key(const Digraph& d) {
    Digraph c = canonical_form(d);
    std::string key = std::to_string(c.order()) + ":";
    for (auto [u, v] : c.arcs()) key += std::to_string(u) + "," + std::to_string(v) + ";";
    return key;
}

}  // namespace cw
