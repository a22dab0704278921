#pragma once

#include <optional>
#include <vector>

#include "cyclewright/certs.hpp"
#include "cyclewright/digraph.hpp"

namespace cw {

enum class ArcClassMode { TwoBlocks, HatC4 };

/// Level classes of the arcs. label[i] belongs to arcs[i]; labels are 0..3
/// in two-block mode and 0..2 in Ĉ4 mode.
struct ArcClasses {
    ArcClassMode mode = ArcClassMode::TwoBlocks;
    std::vector<Arc> arcs;
    std::vector<int> label;
    Leveling leveling;

    std::vector<Arc> of(int cls) const;
};

/// k and l matter only in two-block mode (long arcs drop by >= k+l-3).
ArcClasses classify_arcs(const Digraph& d, const Leveling& leveling, ArcClassMode mode, int k = 0, int l = 0);

/// Strong D, k >= max(l, 3), l >= 2: colouring within
/// (k+l-2)(k+l-3)(2l+2)(k+l+1) or a C(k,l).
Certificate certify_two_blocks_strong(const Digraph& d, int k, int l);
/// D with an out-generator: colouring within 24 or a Ĉ4.
Certificate certify_hatC4(const Digraph& d);
/// 2-strong D, k >= l, k+l >= 4, (k,l) != (2,2): colouring within
/// (k+l-2)(k-1)+1 or a C(k,l).
Certificate certify_two_strong(const Digraph& d, int k, int l);

struct MengerResult {
    /// Up to two internally disjoint (u,v)-dipaths.
    std::vector<std::vector<int>> paths;
    /// Set when exactly one path exists and a single vertex separates.
    std::optional<int> separator;
};

MengerResult menger_two_paths(const Digraph& d, int u, int v);

}  // namespace cw
