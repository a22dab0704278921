#include <algorithm>
#include <deque>
#include <functional>

#include "cyclewright/digraph.hpp"

namespace cw {

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    const int n = d.order();
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::vector<int>> comps;
    int counter = 0;
    // Iterative Tarjan: frame = (vertex, next out-neighbour position).
    std::vector<std::pair<int, std::size_t>> frames;
    for (int s = 0; s < n; ++s) {
        if (index[s] != -1) continue;
        frames.push_back({s, 0});
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < d.out(v).size()) {
                int w = d.out(v)[pos++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            int vv = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[vv]);
            if (low[vv] == index[vv]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != vv);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

std::vector<int> reachable_from(const Digraph& d, int u, const std::vector<char>& removed) {
    std::vector<char> seen(d.order(), 0);
    std::vector<int> order{u}, result;
    seen[u] = 1;
    while (!order.empty()) {
        int v = order.back();
        order.pop_back();
        result.push_back(v);
        for (int w : d.out(v))
            if (!seen[w] && (removed.empty() || !removed[w])) {
                seen[w] = 1;
                order.push_back(w);
            }
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool is_strong(const Digraph& d) {
    if (d.order() <= 1) return true;
    if (static_cast<int>(reachable_from(d, 0).size()) != d.order()) return false;
    return static_cast<int>(reachable_from(d.reversed(), 0).size()) == d.order();
}

bool is_connected_underlying(const Digraph& d) {
    if (d.order() <= 1) return true;
    std::vector<char> seen(d.order(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : d.neighbours(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                st.push_back(w);
            }
    }
    return cnt == d.order();
}

bool is_forest_underlying(const Digraph& d) {
    std::vector<int> parent(d.order());
    for (int i = 0; i < d.order(); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int v = 0; v < d.order(); ++v)
        for (int w : d.neighbours(v)) {
            if (w < v) continue;
            int a = find(v), b = find(w);
            if (a == b) return false;
            parent[a] = b;
        }
    return true;
}

std::vector<std::vector<int>> biconnected_components(const Digraph& d) {
    const int n = d.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;
    struct Frame {
        int v, parent;
        std::size_t pos;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        disc[s] = low[s] = timer++;
        std::vector<Frame> st{{s, -1, 0}};
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& nb = d.neighbours(f.v);
            if (f.pos < nb.size()) {
                int w = nb[f.pos++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back({f.v, w});
                    disc[w] = low[w] = timer++;
                    st.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            int v = f.v, p = f.parent;
            st.pop_back();
            if (p == -1) continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                std::vector<int> comp;
                while (true) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    comp.push_back(e.first);
                    comp.push_back(e.second);
                    if (e.first == p && e.second == v) break;
                }
                std::sort(comp.begin(), comp.end());
                comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
                blocks.push_back(std::move(comp));
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

bool is_biconnected_underlying(const Digraph& d) {
    if (d.order() < 2) return false;
    auto b = biconnected_components(d);
    return b.size() == 1 && static_cast<int>(b[0].size()) == d.order();
}

bool is_robust(const Digraph& d) { return is_biconnected_underlying(d) && is_strong(d); }

bool is_k_strong(const Digraph& d, int k) {
    if (k < 1) throw PreconditionError("is_k_strong needs k >= 1");
    const int n = d.order();
    if (k == 1) return is_strong(d);
    if (n < k + 1) return false;
    // Exhaustive over deletion sets of size k-1 (desk scale only).
    std::vector<int> pick(k - 1);
    std::function<bool(int, int)> rec = [&](int idx, int from) -> bool {
        if (idx == k - 1) {
            std::vector<int> keep;
            std::vector<char> gone(n, 0);
            for (int v : pick) gone[v] = 1;
            for (int v = 0; v < n; ++v)
                if (!gone[v]) keep.push_back(v);
            return is_strong(induced_subdigraph(d, keep).graph);
        }
        for (int v = from; v < n; ++v) {
            pick[idx] = v;
            if (!rec(idx + 1, v + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

std::vector<int> shortest_dipath(const Digraph& d, int u, int v, const std::vector<char>& removed) {
    std::vector<int> pred(d.order(), -2);
    std::deque<int> q{u};
    pred[u] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == v) break;
        for (int y : d.out(x))
            if (pred[y] == -2 && (removed.empty() || !removed[y] || y == v)) {
                pred[y] = x;
                q.push_back(y);
            }
    }
    if (pred[v] == -2) return {};
    std::vector<int> path;
    for (int x = v; x != -1; x = pred[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

Leveling bfs_leveling(const Digraph& d, int u) {
    const int n = d.order();
    if (u < 0 || u >= n) throw PreconditionError("root out of range");
    Leveling lv;
    lv.root = u;
    lv.parent.assign(n, -1);
    lv.level.assign(n, -1);
    lv.level[u] = 0;
    std::deque<int> q{u};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : d.out(x))
            if (lv.level[y] == -1) {
                lv.level[y] = lv.level[x] + 1;
                lv.parent[y] = x;
                q.push_back(y);
            }
    }
    for (int v = 0; v < n; ++v)
        if (lv.level[v] == -1)
            throw NoOutGenerator("vertex " + std::to_string(v) + " unreachable from " + std::to_string(u));
    return lv;
}

int first_out_generator(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v)
        if (static_cast<int>(reachable_from(d, v).size()) == d.order()) return v;
    return -1;
}

}  // namespace cw
