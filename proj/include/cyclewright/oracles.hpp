#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclewright/digraph.hpp"

namespace cw {

struct SearchBudget {
    std::int64_t node_limit = 200'000'000;
    std::chrono::milliseconds time_limit{std::chrono::minutes(5)};
    std::uint64_t seed = 0;

    /// Defaults, with node_limit overridden by CYCLEWRIGHT_BUDGET if set.
    static SearchBudget from_env();
};

/// Counts search nodes and watches the clock.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& b);
    /// false once either limit is hit; sticky.
    bool tick();
    bool exhausted() const { return exhausted_; }
    std::int64_t nodes() const { return nodes_; }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::int64_t nodes_ = 0;
    bool exhausted_ = false;
};

enum class SearchStatus { Found, Absent, Indeterminate };

struct SubdivisionResult {
    SearchStatus status = SearchStatus::Indeterminate;
    std::optional<SubdivisionWitness> witness;
    std::int64_t nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
    bool absent() const { return status == SearchStatus::Absent; }
};

struct PathResult {
    SearchStatus status = SearchStatus::Indeterminate;
    std::vector<int> path;
};

inline constexpr int kDefaultChromaticLimit = 20;

/// Exact chromatic number of the underlying graph (DSATUR branch and bound).
int chromatic_number_exact(const Digraph& d, int max_order = kDefaultChromaticLimit,
                           const SearchBudget& budget = {});
/// An optimal colouring; palette_size equals the chromatic number.
Coloring optimal_coloring(const Digraph& d, int max_order = kDefaultChromaticLimit, const SearchBudget& budget = {});
/// A proper colouring with at most k colours, or nullopt if none exists.
std::optional<Coloring> color_with_at_most(const Digraph& d, int k, const SearchBudget& budget = {});
/// Size of a greedily grown clique in the underlying graph; a lower bound.
int greedy_clique_bound(const Digraph& d);

/// Exhaustive search for a subdivision of the oriented cycle `spec` (n <= 64).
SubdivisionResult find_subdivision(const Digraph& d, const OrientedCycleSpec& spec, const SearchBudget& budget = {});

/// P^sign(k,l): a block of exactly k arcs in direction sign (+1 forward),
/// then exactly l arcs the other way. l = 0 gives a plain dipath.
PathResult find_two_block_path(const Digraph& d, int sign, int k, int l, const SearchBudget& budget = {});

/// An oriented cycle of the underlying graph. dirs[i] is the direction of
/// the arc between walk[i] and walk[i+1]; walk.back() == walk.front().
struct OrientedCycle {
    std::vector<int> walk;
    std::vector<Dir> dirs;
    int blocks = 0;
};

/// Block count of a cyclic direction sequence; 1 for a dicycle.
int count_blocks(const std::vector<Dir>& dirs);
/// Throws BudgetExceeded if the search is cut short.
std::optional<OrientedCycle> cycle_with_at_most_blocks(const Digraph& d, int max_blocks,
                                                       const SearchBudget& budget = {});
/// nullopt stands for Infinite (underlying forest).
std::optional<int> min_blocks_over_cycles(const Digraph& d, const SearchBudget& budget = {});

/// A longest directed cycle as its vertex sequence (closing arc implied).
std::optional<std::vector<int>> longest_directed_cycle(const Digraph& d, const SearchBudget& budget = {});
/// A longest dipath (vertex sequence, length = size - 1).
std::vector<int> longest_dipath(const Digraph& d, const SearchBudget& budget = {});

struct GallaiRoyResult {
    Coloring coloring;
    std::vector<int> dipath;
};

GallaiRoyResult gallai_roy(const Digraph& d, const SearchBudget& budget = {});

}  // namespace cw
