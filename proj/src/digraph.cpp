#include "cyclewright/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cw {

Digraph::Digraph(int n, std::vector<Arc> arcs, bool oriented) : n_(n), oriented_(oriented) {
    if (n < 0) throw PreconditionError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    out_.resize(n);
    in_.resize(n);
    nbr_.resize(n);
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [u, v] = arcs[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
        if (i > 0 && arcs[i - 1] == arcs[i])
            throw PreconditionError("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
    }
    arcs_ = std::move(arcs);
    for (auto [u, v] : arcs_) {
        adj_[static_cast<std::size_t>(u) * n + v] = 1;
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(in_[v].begin(), in_[v].end());
        auto& nb = nbr_[v];
        std::merge(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(), std::back_inserter(nb));
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    if (oriented_ && has_digon()) throw PreconditionError("oriented digraph contains a digon");
}

bool Digraph::has_digon() const {
    for (auto [u, v] : arcs_)
        if (u < v && has_arc(v, u)) return true;
    return false;
}

std::size_t Digraph::underlying_edge_count() const {
    std::size_t s = 0;
    for (int v = 0; v < n_; ++v) s += nbr_[v].size();
    return s / 2;
}

Digraph Digraph::reversed() const {
    std::vector<Arc> r;
    r.reserve(arcs_.size());
    for (auto [u, v] : arcs_) r.emplace_back(v, u);
    return Digraph(n_, std::move(r), oriented_);
}

Digraph Digraph::with_arcs(const std::vector<Arc>& extra) const {
    std::vector<Arc> a = arcs_;
    for (const Arc& e : extra)
        if (!has_arc(e.first, e.second)) a.push_back(e);
    return Digraph(n_, std::move(a));
}

Digraph Digraph::without_arcs(const std::vector<Arc>& removed) const {
    std::set<Arc> drop(removed.begin(), removed.end());
    std::vector<Arc> a;
    for (const Arc& e : arcs_)
        if (!drop.count(e)) a.push_back(e);
    return Digraph(n_, std::move(a), oriented_);
}

std::vector<int> Subdigraph::lift(const std::vector<int>& path) const {
    std::vector<int> r;
    r.reserve(path.size());
    for (int v : path) r.push_back(to_parent[v]);
    return r;
}

Subdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices) {
    std::vector<int> local(d.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (local[vertices[i]] != -1) throw PreconditionError("repeated vertex in induced set");
        local[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs())
        if (local[u] >= 0 && local[v] >= 0) arcs.emplace_back(local[u], local[v]);
    return {Digraph(static_cast<int>(vertices.size()), std::move(arcs)), vertices};
}

Subdigraph identity_subdigraph(const Digraph& d) {
    std::vector<int> id(d.order());
    std::iota(id.begin(), id.end(), 0);
    return {d, id};
}

Digraph spanning_subdigraph(const Digraph& d, const std::vector<Arc>& arcs) {
    for (const Arc& a : arcs)
        if (!d.has_arc(a.first, a.second)) throw PreconditionError("arc not in host digraph");
    return Digraph(d.order(), arcs);
}

bool Leveling::is_ancestor(int a, int x) const {
    while (x != -1 && level[x] >= level[a]) {
        if (x == a) return true;
        x = parent[x];
    }
    return false;
}

int Leveling::lca(int a, int b) const {
    while (level[a] > level[b]) a = parent[a];
    while (level[b] > level[a]) b = parent[b];
    while (a != b) {
        a = parent[a];
        b = parent[b];
    }
    return a;
}

std::vector<int> Leveling::tree_path(int a, int x) const {
    std::vector<int> p;
    while (x != a) {
        if (x == -1) throw PreconditionError("tree_path: not an ancestor");
        p.push_back(x);
        x = parent[x];
    }
    p.push_back(a);
    std::reverse(p.begin(), p.end());
    return p;
}

int Leveling::height() const {
    int h = 0;
    for (int l : level) h = std::max(h, l);
    return h;
}

int Coloring::colors_used() const {
    std::set<int> s(color.begin(), color.end());
    return static_cast<int>(s.size());
}

OrientedCycleSpec OrientedCycleSpec::two_blocks(int k, int l) {
    OrientedCycleSpec s{{{k, Dir::Forward}, {l, Dir::Backward}}};
    s.validate();
    return s;
}

OrientedCycleSpec OrientedCycleSpec::directed(int k) {
    OrientedCycleSpec s{{{k, Dir::Forward}}};
    s.validate();
    return s;
}

OrientedCycleSpec OrientedCycleSpec::antidirected(int half_length) {
    OrientedCycleSpec s;
    for (int i = 0; i < half_length; ++i) {
        s.blocks.push_back({1, Dir::Forward});
        s.blocks.push_back({1, Dir::Backward});
    }
    s.validate();
    return s;
}

int OrientedCycleSpec::order() const {
    int t = 0;
    for (const Block& b : blocks) t += b.length;
    return t;
}

void OrientedCycleSpec::validate() const {
    if (blocks.empty()) throw PreconditionError("cycle spec has no blocks");
    for (const Block& b : blocks)
        if (b.length < 1) throw PreconditionError("block length must be positive");
    if (order() < 2) throw PreconditionError("cycle spec shorter than 2");
    if (blocks.size() == 1) {
        if (blocks[0].dir != Dir::Forward) throw PreconditionError("single-block spec must be forward");
        return;
    }
    if (blocks.size() % 2 != 0) throw PreconditionError("block count of a non-directed cycle is even");
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].dir == blocks[(i + 1) % blocks.size()].dir)
            throw PreconditionError("block directions must alternate");
}

std::string OrientedCycleSpec::name() const {
    if (blocks.size() == 1) return "dicycle(" + std::to_string(blocks[0].length) + ")";
    if (blocks.size() == 2) {
        int k = blocks[0].length, l = blocks[1].length;
        return "C(" + std::to_string(k) + "," + std::to_string(l) + ")";
    }
    std::string s = "blocks(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += (blocks[i].dir == Dir::Forward ? "+" : "-") + std::to_string(blocks[i].length);
    }
    return s + ")";
}

SubdivisionWitness SubdivisionWitness::lifted(const Subdigraph& s) const {
    SubdivisionWitness w{spec, s.lift(branch), {}};
    for (const auto& p : paths) w.paths.push_back(s.lift(p));
    return w;
}

SubdivisionWitness SubdivisionWitness::reversed_orientation() const {
    SubdivisionWitness w = *this;
    for (Block& b : w.spec.blocks) b.dir = b.dir == Dir::Forward ? Dir::Backward : Dir::Forward;
    if (w.spec.blocks.size() == 1) {
        // Keep the single block forward by walking the cycle the other way.
        w.spec.blocks[0].dir = Dir::Forward;
        std::reverse(w.paths[0].begin(), w.paths[0].end());
    }
    return w;
}

std::vector<int> SubdivisionWitness::vertices() const {
    std::set<int> s;
    for (const auto& p : paths) s.insert(p.begin(), p.end());
    return {s.begin(), s.end()};
}

}  // namespace cw
