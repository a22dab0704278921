#pragma once

#include <optional>
#include <vector>

#include "cyclewright/certs.hpp"
#include "cyclewright/digraph.hpp"

namespace cw {

/// A digraph together with a Hamiltonian dicycle cycle[0] -> cycle[1] ->
/// ... -> cycle[n-1] -> cycle[0].
class ChordedCycle {
public:
    ChordedCycle(Digraph d, std::vector<int> cycle);

    const Digraph& digraph() const { return d_; }
    const std::vector<int>& cycle() const { return cycle_; }
    int order() const { return d_.order(); }
    int pos(int v) const { return pos_[v]; }
    /// Steps from u to v along the cycle.
    int forward(int u, int v) const;
    /// Distance on the undirected cycle.
    int cycle_distance(int u, int v) const;
    bool is_cycle_arc(int u, int v) const { return forward(u, v) == 1; }
    std::vector<Arc> chords() const;
    int span(const Arc& chord) const { return cycle_distance(chord.first, chord.second); }
    /// 0 when there is no chord.
    int max_span() const;
    /// Cycle segment from u forward to v, both included.
    std::vector<int> segment(int u, int v) const;

private:
    Digraph d_;
    std::vector<int> cycle_, pos_;
};

/// Proper colouring with fewer than 2 * max_span colours. Throws
/// LemmaViolation if even an exact search cannot stay below that.
Coloring span_coloring(const ChordedCycle& cc);
/// Which route span_coloring took on the last call in this thread:
/// "formula" or "exact".
const char* last_span_route();
/// span_coloring failures caught during the last certify_hamiltonian_ckk
/// call on this thread. Each was recovered from by exact colouring.
const std::vector<LemmaViolation>& span_incidents();

/// colA.color[i] colours a[i], colB.color[i] colours b[i]. Vertices of B
/// adjacent to A are recoloured into the low colours and A is shifted above
/// them.
Coloring combine_split(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b, const Coloring& col_a,
                       const Coloring& col_b);

struct NeighbourCheck {
    std::vector<int> n_a, n_b;
    /// Both neighbourhoods sit inside their windows (so have size <= 2k+1).
    bool within_windows = true;
    std::optional<Arc> violating_arc;
    std::optional<SubdivisionWitness> witness;
};

/// For a chord of span >= 2k-2 splitting the cycle into A (forward from its
/// tail) and B.
NeighbourCheck neighbour_bound_check(const ChordedCycle& cc, const Arc& chord, int k);

Certificate certify_hamiltonian_ckk(const ChordedCycle& cc, int k);
Certificate certify_hamiltonian_ck1(const ChordedCycle& cc, int k);
Certificate certify_strong_ck1(const Digraph& d, int k);

}  // namespace cw
