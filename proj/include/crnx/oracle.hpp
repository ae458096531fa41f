#pragma once

// Exhaustive exploration of the discrete state space: reachability,
// recurrence of states and complexes, and extinction checks.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crnx/crn_model.hpp"
#include "crnx/domination.hpp"
#include "crnx/forest.hpp"
#include "crnx/graph.hpp"

namespace crnx {

inline constexpr std::size_t kDefaultStateCap = 200000;
inline constexpr Count kDefaultBudget = 6;

struct StateEdge {
  std::size_t reaction = 0;
  std::size_t to = 0;
};

struct StateGraph {
  std::vector<State> states;                     // states[0] is the root
  std::vector<std::vector<StateEdge>> successors;
  std::vector<std::size_t> scc_of;
  std::vector<bool> scc_terminal;

  std::size_t root() const { return 0; }
  std::optional<std::size_t> find(const State& x) const;
};

// Breadth-first closure of {x0}. Throws CapExceeded past hard_cap states.
StateGraph explore(const ReactionNetwork& net, const State& x0,
                   std::size_t hard_cap = kDefaultStateCap);

// Per state: true iff its SCC is terminal.
std::vector<bool> recurrent_states(const StateGraph& g);

// Every terminal SCC holds a state charging y.
bool complex_recurrent(const StateGraph& g, const Complex& y);
std::vector<bool> complex_recurrence(const ReactionNetwork& net, const StateGraph& g);

// Every complex listed in yc is transient from the root.
bool extinction_on(const ReactionNetwork& net, const StateGraph& g, const ComplexSet& yc);

// Nonnegative states of the given dimension with coordinate sum <= budget,
// ordered by total and then lexicographically.
std::vector<State> states_with_total_at_most(std::size_t dimension, Count budget);

struct ExtinctionSweep {
  bool holds = true;
  std::size_t roots_checked = 0;
  Count budget = 0;
  // First root (in states_with_total_at_most order) where some complex of yc
  // stays recurrent, the complex and a recurrent state charging it.
  std::optional<State> counterexample_root;
  std::optional<std::size_t> recurrent_complex;
  std::optional<State> recurrent_witness;
};

ExtinctionSweep extinction_sweep(const ReactionNetwork& net, const ComplexSet& yc,
                                 const std::vector<State>& roots,
                                 std::size_t hard_cap = kDefaultStateCap,
                                 Execution exec = Execution::kParallel);

// Checks every root with total <= budget. An under-approximation of the
// quantifier over all of Z^m_{>=0}.
ExtinctionSweep guaranteed_extinction_on(const ReactionNetwork& net, const ComplexSet& yc,
                                         Count budget = kDefaultBudget,
                                         std::size_t hard_cap = kDefaultStateCap,
                                         Execution exec = Execution::kParallel);

struct Trace {
  State start;
  std::vector<std::size_t> sequence;
  std::vector<Count> counts;  // firings per reaction
  State end;
};

// Fires the sequence from `start`; throws std::invalid_argument if a reaction
// is not charged when its turn comes.
Trace make_trace(const ReactionNetwork& net, const State& start,
                 const std::vector<std::size_t>& sequence);
// end == start + Gamma * counts and counts match the sequence.
bool trace_consistent(const ReactionNetwork& net, const Trace& t);
// Shortest firing sequence from the root to state `target`.
Trace path_to(const ReactionNetwork& net, const StateGraph& g, std::size_t target);

struct SlcRecurrenceReport {
  Partition slcs;
  std::vector<bool> complex_recurrent;
  std::vector<bool> slc_recurrent;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Labels complexes and SLCs and checks: one label per SLC; recurrence
// passes forward along reactions and all domination pairs; the recurrent set
// is a union of SLCs closed in the network extended by every domination pair.
SlcRecurrenceReport slc_recurrence_report(const ReactionNetwork& net, const StateGraph& g);

}  // namespace crnx
