#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclewright/digraph.hpp"
#include "cyclewright/oracles.hpp"

namespace cw {

/// Edges are sorted vertex lists over 0..ground_size-1, no repeats.
struct Hypergraph {
    int ground_size = 0;
    std::vector<std::vector<int>> edges;

    /// Throws ImproperInput on out-of-range or repeated vertices, or a
    /// repeated edge. Sorts each edge.
    void normalize();
    bool operator==(const Hypergraph&) const = default;
};

/// Shortest alternating vertex/edge cycle; nullopt for Infinite.
std::optional<int> hypergraph_girth(const Hypergraph& h);
/// A colouring with c colours leaving no edge monochromatic, or nullopt.
std::optional<std::vector<int>> weak_coloring(const Hypergraph& h, int c, const SearchBudget& budget = {});
/// Throws PreconditionError if an edge has fewer than 2 vertices.
int weak_chromatic_number(const Hypergraph& h, const SearchBudget& budget = {});

/// Uniform hypergraph with girth > g and weak chromatic number > c. Grows
/// edges against the current weak colouring until none is left.
Hypergraph search_hypergraph(int uniformity, int g, int c, const SearchBudget& budget = {});

/// Every proper colouring with colours 0..c-1 of the underlying graph, in
/// lexicographic order of the colour vectors.
std::vector<std::vector<int>> enumerate_colorings(const Digraph& d, int c, const SearchBudget& budget = {});

/// Acyclic digraph with chromatic number >= c whose oriented cycles all have
/// more than b blocks. Only c <= 3 is within reach.
Digraph build_blocks_digraph(int b, int c, const SearchBudget& budget = {});

/// Subdivision of spec in an (order-1)-strong digraph, by greedy picks and a
/// closing dipath.
SubdivisionWitness embed_cycle_in_k_strong(const Digraph& d, const OrientedCycleSpec& spec);

// Generators. Random ones are deterministic in the seed.
Digraph transitive_tournament(int n);
Digraph directed_cycle(int n);
Digraph complete_digraph(int n);
Digraph random_tournament(int n, std::uint64_t seed);
Digraph random_strong_digraph(int n, int m, std::uint64_t seed);
/// Cycle 0 -> 1 -> ... -> n-1 -> 0 plus each chord of span <= max_span
/// with probability density; never a digon.
Digraph hamiltonian_with_bounded_span(int n, int max_span, double density, std::uint64_t seed);
/// Cycle as above plus each chord u -> v with 2 <= forward(u, v) <= max_forward
/// with probability density; never a digon.
Digraph hamiltonian_with_bounded_forward(int n, int max_forward, double density, std::uint64_t seed);

/// "g <ground_size>" then one edge per line.
std::string format_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);

}  // namespace cw
