#pragma once

#include <vector>

#include "cyclewright/digraph.hpp"

namespace cw {

/// (A, B) partition of V(D) and the arcs from A to B.
struct BipartiteCut {
    std::vector<int> a, b;
    std::vector<Arc> forward_arcs;
};

/// Forward arcs of a cut restricted to a core where every vertex meets
/// enough of them.
struct BipartiteCore {
    std::vector<int> a, b;
    std::vector<Arc> arcs;
};

/// The largest induced subdigraph whose underlying graph has minimum
/// degree >= d. Order 0 when there is none.
Subdigraph peel_to_min_degree(const Digraph& d, int min_degree);

/// At least a quarter of the arcs go from A to B.
BipartiteCut quarter_directed_cut(const Digraph& d);

/// Repeatedly drops vertices meeting at most p forward arcs. Throws
/// Degenerate if nothing is left.
BipartiteCore dense_bipartite_subgraph(const BipartiteCut& cut, int p);

/// A cycle of the underlying graph through at least min-degree + 1 vertices
/// (at least 2k when the graph is bipartite with minimum degree k), as a
/// vertex sequence. Throws PreconditionError if some degree is below k.
std::vector<int> long_cycle_bipartite(const Digraph& g, int k);

/// Oriented D whose peel at 8k-8 is nonempty: an antidirected cycle of
/// length >= 2k, every path of the witness a single arc.
SubdivisionWitness find_antidirected(const Digraph& d, int k);

}  // namespace cw
