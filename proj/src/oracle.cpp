#include "crnx/oracle.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "crnx/errors.hpp"

namespace crnx {

namespace {

struct StateHash {
  std::size_t operator()(const State& x) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Count v : x) {
      h ^= std::hash<Count>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

std::optional<std::size_t> StateGraph::find(const State& x) const {
  auto it = std::find(states.begin(), states.end(), x);
  if (it == states.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states.begin());
}

StateGraph explore(const ReactionNetwork& net, const State& x0, std::size_t hard_cap) {
  if (x0.size() != net.num_species()) throw InputError("initial state has wrong length");
  if (std::any_of(x0.begin(), x0.end(), [](Count v) { return v < 0; })) {
    throw InputError("initial state has a negative count");
  }
  StateGraph g;
  std::unordered_map<State, std::size_t, StateHash> index;
  g.states.push_back(x0);
  g.successors.emplace_back();
  index.emplace(x0, 0);
  for (std::size_t head = 0; head < g.states.size(); ++head) {
    for (std::size_t k = 0; k < net.num_reactions(); ++k) {
      std::optional<State> next = fire(net, g.states[head], k);
      if (!next) continue;
      auto [it, inserted] = index.emplace(*next, g.states.size());
      if (inserted) {
        if (g.states.size() >= hard_cap) {
          throw CapExceeded("state space exceeds " + std::to_string(hard_cap) + " states");
        }
        g.states.push_back(std::move(*next));
        g.successors.emplace_back();
      }
      g.successors[head].push_back({k, it->second});
    }
  }

  ReactionGraph rg;
  rg.num_vertices = g.states.size();
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    for (const StateEdge& e : g.successors[s]) rg.edges.push_back({s, e.to, e.reaction});
  }
  const Partition sccs = strong_linkage_classes(rg);
  g.scc_of = sccs.block_of;
  g.scc_terminal.assign(sccs.blocks.size(), true);
  for (const GraphEdge& e : rg.edges) {
    if (g.scc_of[e.from] != g.scc_of[e.to]) g.scc_terminal[g.scc_of[e.from]] = false;
  }
  return g;
}

std::vector<bool> recurrent_states(const StateGraph& g) {
  std::vector<bool> out(g.states.size());
  for (std::size_t s = 0; s < g.states.size(); ++s) out[s] = g.scc_terminal[g.scc_of[s]];
  return out;
}

bool complex_recurrent(const StateGraph& g, const Complex& y) {
  std::vector<bool> charged(g.scc_terminal.size(), false);
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    if (g.scc_terminal[g.scc_of[s]] && is_charged(y, g.states[s])) charged[g.scc_of[s]] = true;
  }
  for (std::size_t c = 0; c < charged.size(); ++c) {
    if (g.scc_terminal[c] && !charged[c]) return false;
  }
  return true;
}

std::vector<bool> complex_recurrence(const ReactionNetwork& net, const StateGraph& g) {
  std::vector<bool> out;
  for (const Complex& y : net.complexes()) out.push_back(complex_recurrent(g, y));
  return out;
}

bool extinction_on(const ReactionNetwork& net, const StateGraph& g, const ComplexSet& yc) {
  return std::none_of(yc.begin(), yc.end(), [&](std::size_t v) {
    return complex_recurrent(g, net.complexes().at(v));
  });
}

std::vector<State> states_with_total_at_most(std::size_t dimension, Count budget) {
  std::vector<State> out;
  if (budget < 0) return out;
  State x(dimension, 0);
  for (Count total = 0; total <= budget; ++total) {
    if (dimension == 0) {
      if (total == 0) out.push_back(x);
      continue;
    }
    // Lexicographic enumeration of compositions of `total` into `dimension` parts.
    std::function<void(std::size_t, Count)> rec = [&](std::size_t i, Count left) {
      if (i + 1 == dimension) {
        x[i] = left;
        out.push_back(x);
        return;
      }
      for (Count v = 0; v <= left; ++v) {
        x[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total);
  }
  return out;
}

namespace {

struct RootResult {
  bool holds = true;
  std::size_t complex = 0;
  State witness;
};

RootResult check_root(const ReactionNetwork& net, const ComplexSet& yc, const State& root,
                      std::size_t hard_cap) {
  const StateGraph g = explore(net, root, hard_cap);
  for (std::size_t v : yc) {
    const Complex& y = net.complexes().at(v);
    if (complex_recurrent(g, y)) {
      for (std::size_t s = 0; s < g.states.size(); ++s) {
        if (g.scc_terminal[g.scc_of[s]] && is_charged(y, g.states[s])) {
          return {false, v, g.states[s]};
        }
      }
    }
  }
  return {};
}

}  // namespace

ExtinctionSweep extinction_sweep(const ReactionNetwork& net, const ComplexSet& yc,
                                 const std::vector<State>& roots, std::size_t hard_cap,
                                 Execution exec) {
  ExtinctionSweep sweep;
  std::vector<RootResult> results(roots.size());
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      results[i] = check_root(net, yc, roots[i], hard_cap);
      ++sweep.roots_checked;
      if (!results[i].holds) break;
    }
  } else {
    std::vector<std::exception_ptr> errors(roots.size());
    const long count = static_cast<long>(roots.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      const auto u = static_cast<std::size_t>(i);
      try {
        results[u] = check_root(net, yc, roots[u], hard_cap);
      } catch (...) {
        errors[u] = std::current_exception();
      }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      ++sweep.roots_checked;
      if (!results[i].holds) break;
    }
  }
  for (std::size_t i = 0; i < sweep.roots_checked; ++i) {
    if (!results[i].holds) {
      sweep.holds = false;
      sweep.counterexample_root = roots[i];
      sweep.recurrent_complex = results[i].complex;
      sweep.recurrent_witness = results[i].witness;
      break;
    }
  }
  return sweep;
}

ExtinctionSweep guaranteed_extinction_on(const ReactionNetwork& net, const ComplexSet& yc,
                                         Count budget, std::size_t hard_cap, Execution exec) {
  ExtinctionSweep sweep = extinction_sweep(
      net, yc, states_with_total_at_most(net.num_species(), budget), hard_cap, exec);
  sweep.budget = budget;
  return sweep;
}

Trace make_trace(const ReactionNetwork& net, const State& start,
                 const std::vector<std::size_t>& sequence) {
  Trace t{start, sequence, std::vector<Count>(net.num_reactions(), 0), start};
  for (std::size_t k : sequence) {
    std::optional<State> next = fire(net, t.end, k);
    if (!next) throw std::invalid_argument("reaction " + std::to_string(k + 1) + " not charged");
    t.end = std::move(*next);
    ++t.counts[k];
  }
  return t;
}

bool trace_consistent(const ReactionNetwork& net, const Trace& t) {
  if (t.counts.size() != net.num_reactions() || t.start.size() != net.num_species() ||
      t.end.size() != net.num_species()) {
    return false;
  }
  std::vector<Count> tally(net.num_reactions(), 0);
  for (std::size_t k : t.sequence) {
    if (k >= net.num_reactions()) return false;
    ++tally[k];
  }
  if (tally != t.counts) return false;
  const StoichMatrix gamma = stoich_matrix(net);
  for (std::size_t i = 0; i < net.num_species(); ++i) {
    Count x = t.start[i];
    for (std::size_t k = 0; k < net.num_reactions(); ++k) x += gamma(i, k) * t.counts[k];
    if (x != t.end[i]) return false;
  }
  return true;
}

Trace path_to(const ReactionNetwork& net, const StateGraph& g, std::size_t target) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(g.states.size(), kNone);
  std::vector<std::size_t> via(g.states.size(), kNone);
  std::deque<std::size_t> queue{g.root()};
  parent[g.root()] = g.root();
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    if (s == target) break;
    for (const StateEdge& e : g.successors[s]) {
      if (parent[e.to] == kNone) {
        parent[e.to] = s;
        via[e.to] = e.reaction;
        queue.push_back(e.to);
      }
    }
  }
  if (target >= g.states.size() || parent[target] == kNone) {
    throw std::invalid_argument("target state not reachable");
  }
  std::vector<std::size_t> seq;
  for (std::size_t s = target; s != g.root(); s = parent[s]) seq.push_back(via[s]);
  std::reverse(seq.begin(), seq.end());
  return make_trace(net, g.states[g.root()], seq);
}

SlcRecurrenceReport slc_recurrence_report(const ReactionNetwork& net, const StateGraph& g) {
  SlcRecurrenceReport rep;
  const ReactionGraph base = reaction_graph(net);
  rep.slcs = strong_linkage_classes(base);
  rep.complex_recurrent = complex_recurrence(net, g);
  for (const ComplexSet& block : rep.slcs.blocks) {
    const bool first = rep.complex_recurrent[block.front()];
    bool uniform = true;
    for (std::size_t v : block) uniform = uniform && rep.complex_recurrent[v] == first;
    if (!uniform) {
      rep.violations.push_back("SLC containing " + net.complex_name(block.front()) +
                               " mixes recurrent and transient complexes");
    }
    bool all = true;
    for (std::size_t v : block) all = all && rep.complex_recurrent[v];
    rep.slc_recurrent.push_back(all);
  }
  const ReactionGraph full = dom_graph(net, domination_set(net));
  for (const GraphEdge& e : full.edges) {
    if (rep.complex_recurrent[e.from] && !rep.complex_recurrent[e.to]) {
      rep.violations.push_back("recurrence of " + net.complex_name(e.from) +
                               " does not pass to " + net.complex_name(e.to));
    }
  }
  ComplexSet recurrent;
  for (std::size_t v = 0; v < net.num_complexes(); ++v) {
    if (rep.complex_recurrent[v]) recurrent.push_back(v);
  }
  if (!is_closed_set(full, recurrent)) {
    rep.violations.push_back("recurrent complexes are not closed in the dom-CRN");
  }
  return rep;
}

}  // namespace crnx
