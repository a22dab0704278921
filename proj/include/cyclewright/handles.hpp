#pragma once

#include <vector>

#include "cyclewright/certs.hpp"
#include "cyclewright/digraph.hpp"

namespace cw {

/// Each handle is a dipath (s, internal..., t); the first one is a closed
/// dipath through `start` (s == t == start).
struct HandleDecomposition {
    int start = -1;
    std::vector<std::vector<int>> handles;

    int count() const { return static_cast<int>(handles.size()); }
    /// Arcs of D_i (handles 0..i-1 in zero-based terms).
    std::vector<Arc> arcs_up_to(int i) const;
    /// Vertices present after the first i handles.
    std::vector<char> vertices_up_to(int i, int n) const;
    /// Index of the last handle with an internal vertex, or -1.
    int last_nontrivial() const;
};

/// Validity against d; `nice` also requires distinct endpoints after the first.
bool is_handle_decomposition(const Digraph& d, const HandleDecomposition& hd, bool nice = false);

/// Ear growing from an arbitrary dicycle.
HandleDecomposition handle_decomposition(const Digraph& d);
/// Ear growing from the given dicycle, keeping later endpoints distinct;
/// longer handles are preferred. Requires a robust digraph.
HandleDecomposition nice_decomposition_from_cycle(const Digraph& d, const std::vector<int>& cycle);
/// Longest dicycle first, then exchange rewrites to a fixpoint.
HandleDecomposition nice_handle_decomposition(const Digraph& d);
/// Exchange rule: a nontrivial handle from s to t whose arc (s,t) sits in an
/// earlier handle is spliced into that handle, and (s,t) takes its place.
/// Returns the number of rewrites applied.
int apply_exchange_rewrites(HandleDecomposition& hd);

Certificate certify_C12(const Digraph& d);
Certificate certify_C22(const Digraph& d);
Certificate certify_C13(const Digraph& d);
Certificate certify_C23(const Digraph& d);

/// Witness of C(k,l) from two internally disjoint dipaths with the same
/// ends, assigning them to blocks if the lengths allow it.
std::optional<SubdivisionWitness> two_path_witness(int k, int l, const std::vector<int>& p, const std::vector<int>& q);

}  // namespace cw
