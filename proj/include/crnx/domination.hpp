#pragma once

// Domination relations between complexes and domination-expanded networks
// (dom-CRNs) together with their admissibility rules.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crnx/crn_model.hpp"
#include "crnx/graph.hpp"

namespace crnx {

// Edge from the dominating complex to the dominated one (to <= from).
struct DominationEdge {
  std::size_t from = 0;
  std::size_t to = 0;

  friend bool operator==(const DominationEdge&, const DominationEdge&) = default;
  friend auto operator<=>(const DominationEdge&, const DominationEdge&) = default;
};

// A dom-CRN over a base network held by the caller. Graph edge labels are the
// reaction indices followed by num_reactions + position in `dom_edges`.
struct DomCrn {
  std::vector<DominationEdge> dom_edges;
  ComplexSet absorbing;
  // Notes about edges dropped while constructing the candidate.
  std::vector<std::string> notes;
};

// All pairs (y, y') of distinct complexes with y' <= y, ordered by (from, to).
std::vector<DominationEdge> domination_set(const ReactionNetwork& net);

ReactionGraph dom_graph(const ReactionNetwork& net,
                        const std::vector<DominationEdge>& dom_edges);

struct AdmissibilityViolation {
  enum class Kind {
    kInvalidComplex,
    kNotDomination,      // edge not in D*
    kDuplicatesReaction, // edge equals a reaction
    kTargetsAbsorbing,   // edge ends in Y
    kNotAbsorbing,       // Y not absorbing in the combined graph
  };
  Kind kind;
  std::optional<DominationEdge> edge;
  std::string message;
};

using DomCrnResult = std::variant<DomCrn, AdmissibilityViolation>;

DomCrnResult build_dom_crn(const ReactionNetwork& net,
                           std::vector<DominationEdge> dom_edges,
                           ComplexSet absorbing);

// Start from D*, drop edges that coincide with reactions, then repeatedly
// drop every edge into the current terminal set until nothing changes.
// Y is the terminal set of the final dom graph.
DomCrn maximal_admissible(const ReactionNetwork& net);

// Largest D admissible for a fixed absorbing set Y: domination edges with
// both endpoints outside Y that do not coincide with a reaction.
DomCrn maximal_admissible_for(const ReactionNetwork& net, const ComplexSet& absorbing);

struct SlcCoincidenceReport {
  enum class Status { kHolds, kNotApplicable, kViolated };
  Status status = Status::kHolds;
  std::string detail;
};

// SLCs of the base network and of the dom-CRN coincide and every terminal SLC
// of the dom-CRN is terminal in the base network. Only meaningful for
// subconservative networks; otherwise reports kNotApplicable.
SlcCoincidenceReport check_slc_coincidence(const ReactionNetwork& net,
                            const std::vector<DominationEdge>& dom_edges,
                            bool subconservative);

std::string describe(const ReactionNetwork& net, const DominationEdge& e);

}  // namespace crnx
