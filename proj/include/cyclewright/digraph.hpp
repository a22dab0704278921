#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cyclewright/errors.hpp"

namespace cw {

using Arc = std::pair<int, int>;

/// Loopless digraph on vertices 0..n-1. Digons are allowed unless the
/// oriented flag is set. Immutable once built.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n, std::vector<Arc> arcs = {}, bool oriented = false);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    /// Sorted lexicographically.
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    /// Neighbours in the underlying simple graph, sorted.
    const std::vector<int>& neighbours(int v) const { return nbr_[v]; }

    bool has_arc(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int degree(int v) const { return static_cast<int>(nbr_[v].size()); }

    bool oriented_flag() const noexcept { return oriented_; }
    bool has_digon() const;
    std::size_t underlying_edge_count() const;

    Digraph reversed() const;
    Digraph with_arcs(const std::vector<Arc>& extra) const;
    Digraph without_arcs(const std::vector<Arc>& removed) const;

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    bool oriented_ = false;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_, nbr_;
    std::vector<std::uint8_t> adj_;
};

/// A digraph cut out of a parent, with the map back to parent vertex ids.
struct Subdigraph {
    Digraph graph;
    std::vector<int> to_parent;

    int lift(int v) const { return to_parent[v]; }
    std::vector<int> lift(const std::vector<int>& path) const;
};

Subdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices);
Subdigraph identity_subdigraph(const Digraph& d);
/// Same vertex set, only the listed arcs (each must be an arc of d).
Digraph spanning_subdigraph(const Digraph& d, const std::vector<Arc>& arcs);

struct Leveling {
    int root = -1;
    std::vector<int> parent;  // -1 at the root
    std::vector<int> level;

    /// a >=_T x: a lies on the tree path from the root to x.
    bool is_ancestor(int a, int x) const;
    int lca(int a, int b) const;
    /// Tree dipath from ancestor a down to x, both included.
    std::vector<int> tree_path(int a, int x) const;
    int height() const;
};

struct Coloring {
    std::vector<int> color;
    int palette_size = 0;

    int colors_used() const;
};

enum class Dir { Forward, Backward };

struct Block {
    int length = 1;
    Dir dir = Dir::Forward;
    bool operator==(const Block&) const = default;
};

/// Block pattern of an oriented cycle in cyclic order.
struct OrientedCycleSpec {
    std::vector<Block> blocks;

    static OrientedCycleSpec two_blocks(int k, int l);  // C(k,l)
    static OrientedCycleSpec directed(int k);
    static OrientedCycleSpec antidirected(int half_length);
    static OrientedCycleSpec hat_c4() { return antidirected(2); }

    int order() const;  // vertex count of the cycle itself
    void validate() const;
    std::string name() const;
    bool operator==(const OrientedCycleSpec&) const = default;
};

/// paths[i] starts at branch[i] and ends at branch[(i+1) % m]. For a
/// backward block consecutive entries (x, y) stand for the arc y -> x.
struct SubdivisionWitness {
    OrientedCycleSpec spec;
    std::vector<int> branch;
    std::vector<std::vector<int>> paths;

    SubdivisionWitness lifted(const Subdigraph& s) const;
    /// Witness for the same digraph with every arc reversed.
    SubdivisionWitness reversed_orientation() const;
    std::vector<int> vertices() const;
};

// Connectivity.
std::vector<std::vector<int>> strong_components(const Digraph& d);
bool is_strong(const Digraph& d);
std::vector<int> reachable_from(const Digraph& d, int u, const std::vector<char>& removed = {});
bool is_connected_underlying(const Digraph& d);
bool is_forest_underlying(const Digraph& d);
/// Blocks (2-connected components) of the underlying graph; bridges give
/// two-vertex blocks, isolated vertices are skipped.
std::vector<std::vector<int>> biconnected_components(const Digraph& d);
bool is_biconnected_underlying(const Digraph& d);
bool is_robust(const Digraph& d);
bool is_k_strong(const Digraph& d, int k);
std::vector<int> shortest_dipath(const Digraph& d, int u, int v, const std::vector<char>& removed = {});

Leveling bfs_leveling(const Digraph& d, int u);
/// Lowest id among out-generators, or -1.
int first_out_generator(const Digraph& d);

Coloring combine_colorings(const Digraph& d1, const Coloring& c1, const Digraph& d2, const Coloring& c2);

Subdigraph reduce_to_robust(const Digraph& d);

// Text format.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
Digraph read_digraph_file(const std::string& path);
std::string format_digraph(const Digraph& d);
void write_digraph_file(const Digraph& d, const std::string& path);

/// Canonical relabeling (individualisation-refinement); isomorphic inputs give equal outputs.
Digraph canonical_form(const Digraph& d);
std::string canonical_key(const Digraph& d);

}  // namespace cw
