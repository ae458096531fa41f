#pragma once

// Reaction-graph structure: linkage classes, strong linkage classes,
// terminal SLCs and absorbing complex sets.

#include <cstddef>
#include <vector>

#include "crnx/crn_model.hpp"

namespace crnx {

// Sorted, duplicate-free list of complex indices.
using ComplexSet = std::vector<std::size_t>;

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  // Reaction index when < num_reactions, otherwise num_reactions + domination index.
  std::size_t label = 0;
};

struct ReactionGraph {
  std::size_t num_vertices = 0;
  std::vector<GraphEdge> edges;
};

ReactionGraph reaction_graph(const ReactionNetwork& net);

// Blocks are sorted internally and ordered by their smallest member.
struct Partition {
  std::vector<ComplexSet> blocks;
  std::vector<std::size_t> block_of;
};

Partition linkage_classes(const ReactionGraph& g);
Partition strong_linkage_classes(const ReactionGraph& g);

// SLCs with no edge leaving them, in partition order.
std::vector<ComplexSet> terminal_slcs(const ReactionGraph& g, const Partition& slcs);
std::vector<ComplexSet> terminal_slcs(const ReactionGraph& g);

// Union of the terminal SLCs.
ComplexSet terminal_complexes(const ReactionGraph& g);

bool is_closed_set(const ReactionGraph& g, const ComplexSet& y);
bool is_absorbing_set(const ReactionGraph& g, const ComplexSet& y);

struct AbsorbingSets {
  std::vector<ComplexSet> sets;
  bool truncated = false;
};

// Absorbing sets in increasing size (ties broken lexicographically), at most
// `cap` of them. The terminal set comes first.
AbsorbingSets enumerate_absorbing_sets(const ReactionGraph& g, std::size_t cap);

ComplexSet complement(const ComplexSet& y, std::size_t universe);
bool contains(const ComplexSet& y, std::size_t v);

}  // namespace crnx
