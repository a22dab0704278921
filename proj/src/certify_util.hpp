#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclewright/certs.hpp"
#include "cyclewright/oracles.hpp"

namespace cw::detail {

using Params = std::map<std::string, int>;

SearchBudget fallback_budget();

/// Exhaustive search as the last resort. A definitive absence here means the
/// theorem's constructive route failed on an instance where it must succeed,
/// which is reported as a diagnostic rather than a certificate.
Certificate fallback(const Digraph& d, const OrientedCycleSpec& spec, const std::string& theorem, const Params& params,
                     int bound, const std::string& why);

/// Wraps a candidate witness; nullopt if it does not verify.
std::optional<Certificate> accept(const Digraph& d, const std::optional<SubdivisionWitness>& w,
                                  const std::string& theorem, const Params& params, int bound,
                                  const std::string& route);

/// Colouring certificate with palette = colours actually used (max + 1).
Certificate coloring_cert(const std::string& theorem, const Params& params, int bound, Coloring c,
                          const std::string& route);

/// Closed cycle given as v_0..v_{m-1}; the forward segment from u to v.
std::vector<int> cycle_segment(const std::vector<int>& cycle, int u, int v);
std::vector<int> positions(const std::vector<int>& cycle, int n);

/// The two dipaths of a two-block witness, both from the common source to
/// the common sink.
std::pair<std::vector<int>, std::vector<int>> two_dipaths(const SubdivisionWitness& w);

/// A (s,t)-dipath of length at least min_len avoiding `blocked` internally.
std::vector<int> dipath_at_least(const Digraph& d, int s, int t, int min_len, const std::vector<char>& blocked = {});

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b);

}  // namespace cw::detail

namespace cw::detail {

/// Tree dipath from a down to x, or empty when a is not an ancestor of x.
std::vector<int> tree_path_or_empty(const Leveling& L, int a, int x);

/// Concatenation of consecutive dipath pieces; empty if any piece is empty
/// or two pieces do not meet.
std::vector<int> chain(std::initializer_list<std::vector<int>> pieces);

/// Slice [i, j] of a vertex sequence, inclusive.
std::vector<int> slice(const std::vector<int>& p, std::size_t i, std::size_t j);
std::vector<int> reversed(std::vector<int> p);

/// Ĉ4 witness with sources a, b and sinks s1, s2; all four pieces are
/// dipaths given source first.
std::optional<SubdivisionWitness> hat_c4_witness(const std::vector<int>& a_s1, const std::vector<int>& b_s1,
                                                 const std::vector<int>& b_s2, const std::vector<int>& a_s2);

/// Vertices grouped by BFS level.
std::vector<std::vector<int>> level_sets(const Leveling& L);

}  // namespace cw::detail

namespace cw::detail {

/// Replaces every use of arc a->b in the witness by the dipath `path`
/// (a first, b last). The caller guarantees the new internal vertices are
/// unused by the witness.
SubdivisionWitness substitute_arc(const SubdivisionWitness& w, int a, int b, const std::vector<int>& path);

/// The same paths read against a different spec with the same block count.
SubdivisionWitness respec(SubdivisionWitness w, const OrientedCycleSpec& spec);

}  // namespace cw::detail
