#pragma once

// Y-exterior forests of a dom-CRN and the balancing test on each forest.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crnx/domination.hpp"
#include "crnx/linear.hpp"

namespace crnx {

// Edge labels follow dom_graph: reactions first, then domination edges.
struct EdgeEnds {
  std::size_t from = 0;
  std::size_t to = 0;
};
EdgeEnds edge_ends(const ReactionNetwork& net, const DomCrn& dcrn, std::size_t label);
bool is_reaction_label(const ReactionNetwork& net, std::size_t label);
// "R3" or "D2" (1-based).
std::string edge_label_name(const ReactionNetwork& net, std::size_t label);

struct ForestChoice {
  std::size_t complex = 0;
  std::size_t label = 0;

  friend bool operator==(const ForestChoice&, const ForestChoice&) = default;
};

struct ExteriorForest {
  // One entry per complex outside Y, in increasing complex order.
  std::vector<ForestChoice> choices;
  // Reactions whose source lies in Y.
  std::vector<std::size_t> interior;

  // Chosen labels and interior reactions, sorted.
  std::vector<std::size_t> edges() const;
  friend bool operator==(const ExteriorForest&, const ExteriorForest&) = default;
};

struct ForestEnumeration {
  std::vector<ExteriorForest> forests;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultForestCap = 10000;

// Backtracking over exterior complexes in index order; each complex tries its
// non-self-loop outgoing edges ordered by (target complex, label). Throws
// std::invalid_argument when cap < 1.
ForestEnumeration enumerate_forests(const ReactionNetwork& net, const DomCrn& dcrn,
                                    std::size_t cap = kDefaultForestCap);

// Empty string when the forest is valid for the dom-CRN, otherwise a reason.
std::string forest_defect(const ReactionNetwork& net, const DomCrn& dcrn,
                          const ExteriorForest& forest);

enum class NontrivialityReading {
  kTrueReactions,       // exterior reactions of the forest
  kIncludeDomination,   // any chosen exterior edge
};

struct FlowConstraint {
  std::size_t complex = 0;
  std::size_t chosen = 0;
  std::vector<std::size_t> inflow;  // forest edges entering `complex`
};

// Variables alpha over all r + d edge labels, nonnegative.
struct BalancingSystem {
  std::size_t num_reactions = 0;
  std::size_t num_vars = 0;
  std::vector<std::size_t> zeroed;                  // C1: labels outside the forest
  std::vector<std::vector<Count>> kernel_rows;      // C2: rows of Gamma over alpha_R
  std::vector<FlowConstraint> flows;                // C3
  std::vector<std::size_t> candidates;              // NT
};

BalancingSystem build_balancing_system(
    const ReactionNetwork& net, const DomCrn& dcrn, const ExteriorForest& forest,
    NontrivialityReading reading = NontrivialityReading::kTrueReactions);

// Equalities: zeroed variables, then kernel rows. Inequalities: flow rows,
// then alpha_candidate >= 1 when `candidate` is given.
LinearSystem to_linear_system(const BalancingSystem& sys, std::optional<std::size_t> candidate,
                              bool with_flow = true);

// Multipliers with the same meaning as a FarkasWitness, indexed by constraint
// family. zero_multipliers has one entry per label (zero on forest labels).
struct BalanceFarkas {
  std::size_t candidate = 0;
  RationalVector zero_multipliers;
  RationalVector kernel_multipliers;
  RationalVector flow_multipliers;
  Rational positivity_multiplier;
};

struct Balanced {
  std::vector<Integer> alpha;
  std::size_t positive_edge = 0;
};

struct Unbalanced {
  std::vector<BalanceFarkas> witnesses;  // one per candidate, candidate order
};

using BalanceOutcome = std::variant<Balanced, Unbalanced>;

inline bool is_balanced(const BalanceOutcome& o) { return std::holds_alternative<Balanced>(o); }

// Balanced as soon as one candidate admits alpha_k >= 1; an empty candidate
// set is unbalanced with no witnesses.
BalanceOutcome decide_balance(const BalancingSystem& sys);

struct Audit {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
  static Audit pass() { return {}; }
  static Audit fail(std::string why) { return {false, std::move(why)}; }
};

// Re-derives every constraint from the network, dom-CRN and forest and checks
// the outcome against them directly.
Audit verify_balance_outcome(const ReactionNetwork& net, const DomCrn& dcrn,
                             const ExteriorForest& forest, const BalanceOutcome& outcome,
                             NontrivialityReading reading = NontrivialityReading::kTrueReactions);

enum class Execution { kSerial, kParallel };

struct ForestScan {
  // Outcomes for forests [0, outcomes.size()) in enumeration order.
  std::vector<BalanceOutcome> outcomes;
  std::optional<std::size_t> first_unbalanced;
};

// Decides forests in order. With stop_at_unbalanced the scan ends at the first
// unbalanced forest; the parallel variant returns the same result as the
// serial one.
ForestScan scan_forests(const ReactionNetwork& net, const DomCrn& dcrn,
                        const std::vector<ExteriorForest>& forests,
                        NontrivialityReading reading, Execution exec,
                        bool stop_at_unbalanced = true);

}  // namespace crnx
