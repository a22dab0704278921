#include <algorithm>
#include <set>

#include "cyclewright/certs.hpp"
#include "cyclewright/handles.hpp"
#include "cyclewright/oracles.hpp"

namespace cw {

Coloring combine_colorings(const Digraph& d1, const Coloring& c1, const Digraph& d2, const Coloring& c2) {
    if (d1.order() != d2.order()) throw DomainMismatch("colourings over different vertex sets");
    try {
        if (!verify_coloring(d1, c1)) throw ImproperInput("first colouring is improper");
        if (!verify_coloring(d2, c2)) throw ImproperInput("second colouring is improper");
    } catch (const DomainMismatch& e) {
        throw ImproperInput(e.what());
    }
    Coloring r;
    r.palette_size = c1.palette_size * c2.palette_size;
    r.color.resize(d1.order());
    for (int v = 0; v < d1.order(); ++v) r.color[v] = c1.color[v] * c2.palette_size + c2.color[v];
    return r;
}

Subdigraph reduce_to_robust(const Digraph& d) {
    if (!is_strong(d)) throw PreconditionError("reduce_to_robust: digraph is not strong");
    const int chi = chromatic_number_exact(d);
    if (chi <= 2) throw PreconditionError("reduce_to_robust: chromatic number is at most 2");

    // Block of largest chromatic number; ties go to the lowest minimum id.
    std::vector<int> best_block;
    int best_chi = -1;
    for (const auto& block : biconnected_components(d)) {
        int c = chromatic_number_exact(induced_subdigraph(d, block).graph);
        if (c > best_chi || (c == best_chi && block.front() < best_block.front())) {
            best_chi = c;
            best_block = block;
        }
    }
    Subdigraph block = induced_subdigraph(d, best_block);
    auto cycle = longest_directed_cycle(block.graph);
    if (!cycle) throw Error("reduce_to_robust: block without a dicycle");
    HandleDecomposition hd = nice_decomposition_from_cycle(block.graph, *cycle);

    // Drop trivial handles (u,v) whose reverse is already present.
    std::set<Arc> present;
    std::vector<Arc> dropped;
    for (const auto& h : hd.handles) {
        if (h.size() == 2 && present.count({h[1], h[0]})) dropped.emplace_back(h[0], h[1]);
        for (std::size_t j = 0; j + 1 < h.size(); ++j) present.insert({h[j], h[j + 1]});
    }
    Digraph reduced = block.graph.without_arcs(dropped);
    if (reduced.has_digon() || !is_robust(reduced) || chromatic_number_exact(reduced) != chi)
        throw Error("reduce_to_robust: reduction lost a required property");
    return {Digraph(reduced.order(), reduced.arcs(), true), block.to_parent};
}

}  // namespace cw
