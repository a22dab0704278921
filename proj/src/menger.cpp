// Two internally disjoint dipaths by unit vertex capacities: each vertex w
// becomes w_in -> w_out, and two augmenting rounds of BFS.
#include <queue>

#include "cyclewright/leveling.hpp"

namespace cw {

namespace {

struct Edge {
    int to, cap, rev, orig;
};

class Network {
public:
    explicit Network(int nodes) : g_(nodes) {}

    void add(int a, int b, int cap) {
        g_[a].push_back({b, cap, static_cast<int>(g_[b].size()), cap});
        g_[b].push_back({a, 0, static_cast<int>(g_[a].size()) - 1, 0});
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(g_.size(), {-1, -1});
        std::queue<int> q;
        q.push(s);
        pred[s] = {s, -1};
        while (!q.empty() && pred[t].first < 0) {
            int a = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(g_[a].size()); ++i) {
                const Edge& e = g_[a][i];
                if (e.cap > 0 && pred[e.to].first < 0) {
                    pred[e.to] = {a, i};
                    q.push(e.to);
                }
            }
        }
        if (pred[t].first < 0) return false;
        for (int x = t; x != s;) {
            auto [a, i] = pred[x];
            Edge& e = g_[a][i];
            e.cap -= 1;
            g_[x][e.rev].cap += 1;
            x = a;
        }
        return true;
    }

    std::vector<char> reachable(int s) const {
        std::vector<char> seen(g_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (const Edge& e : g_[a])
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    q.push(e.to);
                }
        }
        return seen;
    }

    std::vector<std::vector<Edge>> g_;
};

}  // namespace

MengerResult menger_two_paths(const Digraph& d, int u, int v) {
    const int n = d.order();
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("menger_two_paths needs distinct vertices");
    auto in = [](int w) { return 2 * w; };
    auto out = [](int w) { return 2 * w + 1; };
    Network net(2 * n);
    for (int w = 0; w < n; ++w) net.add(in(w), out(w), (w == u || w == v) ? 2 : 1);
    // Arcs never bind except u -> v itself, so a unit cut is a vertex.
    for (auto [a, b] : d.arcs()) net.add(out(a), in(b), (a == u && b == v) ? 1 : 2);

    int flow = 0;
    while (flow < 2 && net.augment(out(u), in(v))) ++flow;

    MengerResult r;
    // Peel paths off the flow: follow arc edges whose forward capacity is used.
    auto used = [&](int a, const Edge& e) { return e.orig > 0 && e.to != a - 1 && e.orig - e.cap == 1; };
    std::vector<std::vector<char>> taken(2 * n);
    for (int a = 0; a < 2 * n; ++a) taken[a].assign(net.g_[a].size(), 0);
    for (int p = 0; p < flow; ++p) {
        std::vector<int> path{u};
        int cur = u;
        while (cur != v) {
            int a = out(cur), next = -1;
            for (int i = 0; i < static_cast<int>(net.g_[a].size()); ++i) {
                const Edge& e = net.g_[a][i];
                if (!taken[a][i] && used(a, e)) {
                    taken[a][i] = 1;
                    next = e.to / 2;
                    break;
                }
            }
            if (next < 0) throw Error("menger_two_paths: flow decomposition failed");
            path.push_back(next);
            cur = next;
        }
        r.paths.push_back(std::move(path));
    }
    if (flow == 1) {
        auto seen = net.reachable(out(u));
        for (int w = 0; w < n; ++w)
            if (w != u && w != v && seen[in(w)] && !seen[out(w)]) {
                r.separator = w;
                break;
            }
    }
    return r;
}

}  // namespace cw
