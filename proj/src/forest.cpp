#include "crnx/forest.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace crnx {

bool is_reaction_label(const ReactionNetwork& net, std::size_t label) {
  return label < net.num_reactions();
}

EdgeEnds edge_ends(const ReactionNetwork& net, const DomCrn& dcrn, std::size_t label) {
  if (is_reaction_label(net, label)) {
    const Reaction& r = net.reactions()[label];
    return {r.source, r.target};
  }
  const DominationEdge& e = dcrn.dom_edges.at(label - net.num_reactions());
  return {e.from, e.to};
}

std::string edge_label_name(const ReactionNetwork& net, std::size_t label) {
  if (is_reaction_label(net, label)) return "R" + std::to_string(label + 1);
  return "D" + std::to_string(label - net.num_reactions() + 1);
}

std::vector<std::size_t> ExteriorForest::edges() const {
  std::vector<std::size_t> out = interior;
  for (const ForestChoice& c : choices) out.push_back(c.label);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::size_t> interior_reactions(const ReactionNetwork& net, const ComplexSet& y) {
  std::vector<std::size_t> out;
  for (const Reaction& r : net.reactions()) {
    if (contains(y, r.source)) out.push_back(r.index);
  }
  return out;
}

}  // namespace

ForestEnumeration enumerate_forests(const ReactionNetwork& net, const DomCrn& dcrn,
                                    std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("forest cap must be at least 1");
  const std::size_t n = net.num_complexes();
  const ComplexSet exterior = complement(dcrn.absorbing, n);

  std::vector<std::vector<GraphEdge>> options(n);
  for (const GraphEdge& e : dom_graph(net, dcrn.dom_edges).edges) {
    if (e.from != e.to && !contains(dcrn.absorbing, e.from)) options[e.from].push_back(e);
  }
  for (auto& opts : options) {
    std::sort(opts.begin(), opts.end(), [](const GraphEdge& a, const GraphEdge& b) {
      return a.to != b.to ? a.to < b.to : a.label < b.label;
    });
  }

  ForestEnumeration result;
  const std::vector<std::size_t> interior = interior_reactions(net, dcrn.absorbing);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(n, kNone);  // chosen target per assigned complex
  std::vector<std::size_t> picked(exterior.size(), 0);

  auto creates_cycle = [&](std::size_t v, std::size_t target) {
    std::size_t t = target;
    while (t != v && next[t] != kNone) t = next[t];
    return t == v;
  };

  // Collect up to cap + 1 forests; the extra one only signals truncation.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (result.forests.size() > cap) return;
    if (depth == exterior.size()) {
      ExteriorForest f;
      f.interior = interior;
      for (std::size_t i = 0; i < exterior.size(); ++i) {
        f.choices.push_back({exterior[i], options[exterior[i]][picked[i]].label});
      }
      result.forests.push_back(std::move(f));
      return;
    }
    const std::size_t v = exterior[depth];
    for (std::size_t idx = 0; idx < options[v].size(); ++idx) {
      if (creates_cycle(v, options[v][idx].to)) continue;
      picked[depth] = idx;
      next[v] = options[v][idx].to;
      self(self, depth + 1);
      next[v] = kNone;
      if (result.forests.size() > cap) return;
    }
  };
  search(search, 0);
  if (result.forests.size() > cap) {
    result.forests.pop_back();
    result.truncated = true;
  }
  return result;
}

std::string forest_defect(const ReactionNetwork& net, const DomCrn& dcrn,
                          const ExteriorForest& forest) {
  const std::size_t n = net.num_complexes();
  const ComplexSet exterior = complement(dcrn.absorbing, n);
  const std::size_t labels = net.num_reactions() + dcrn.dom_edges.size();
  if (forest.choices.size() != exterior.size()) return "wrong number of exterior choices";
  std::vector<std::size_t> next(n, n);
  for (std::size_t i = 0; i < exterior.size(); ++i) {
    const ForestChoice& c = forest.choices[i];
    if (c.complex != exterior[i]) return "choice listed for unexpected complex";
    if (c.label >= labels) return "choice uses an unknown edge";
    const EdgeEnds ends = edge_ends(net, dcrn, c.label);
    if (ends.from != c.complex) {
      return edge_label_name(net, c.label) + " does not leave " + net.complex_name(c.complex);
    }
    if (ends.to == ends.from) return edge_label_name(net, c.label) + " is a self-loop";
    next[c.complex] = ends.to;
  }
  for (std::size_t v : exterior) {
    std::size_t t = v;
    std::size_t steps = 0;
    while (!contains(dcrn.absorbing, t)) {
      if (++steps > n) return "path from " + net.complex_name(v) + " does not reach Y";
      t = next[t];
    }
  }
  if (forest.interior != interior_reactions(net, dcrn.absorbing)) {
    return "interior reactions differ from the reactions leaving Y";
  }
  return {};
}

BalancingSystem build_balancing_system(const ReactionNetwork& net, const DomCrn& dcrn,
                                       const ExteriorForest& forest,
                                       NontrivialityReading reading) {
  BalancingSystem sys;
  sys.num_reactions = net.num_reactions();
  sys.num_vars = net.num_reactions() + dcrn.dom_edges.size();
  std::vector<bool> in_forest(sys.num_vars, false);
  for (std::size_t label : forest.edges()) in_forest[label] = true;
  for (std::size_t j = 0; j < sys.num_vars; ++j) {
    if (!in_forest[j]) sys.zeroed.push_back(j);
  }
  sys.kernel_rows = stoich_matrix(net).to_rows();
  const auto forest_edges = forest.edges();
  for (const ForestChoice& c : forest.choices) {
    FlowConstraint flow{c.complex, c.label, {}};
    for (std::size_t label : forest_edges) {
      if (edge_ends(net, dcrn, label).to == c.complex) flow.inflow.push_back(label);
    }
    sys.flows.push_back(std::move(flow));
    if (reading == NontrivialityReading::kIncludeDomination || is_reaction_label(net, c.label)) {
      sys.candidates.push_back(c.label);
    }
  }
  std::sort(sys.candidates.begin(), sys.candidates.end());
  return sys;
}

LinearSystem to_linear_system(const BalancingSystem& sys, std::optional<std::size_t> candidate,
                              bool with_flow) {
  LinearSystem ls(sys.num_vars, true);
  for (std::size_t j : sys.zeroed) {
    RationalVector row(sys.num_vars, 0);
    row[j] = 1;
    ls.add_equality(std::move(row), 0);
  }
  for (const auto& k : sys.kernel_rows) {
    RationalVector row(sys.num_vars, 0);
    for (std::size_t j = 0; j < k.size(); ++j) row[j] = Rational(static_cast<long>(k[j]));
    ls.add_equality(std::move(row), 0);
  }
  if (with_flow) {
    for (const FlowConstraint& f : sys.flows) {
      RationalVector row(sys.num_vars, 0);
      row[f.chosen] += 1;
      for (std::size_t l : f.inflow) row[l] -= 1;
      ls.add_inequality(std::move(row), 0);
    }
  }
  if (candidate) {
    RationalVector row(sys.num_vars, 0);
    row.at(*candidate) = 1;
    ls.add_inequality(std::move(row), 1);
  }
  return ls;
}

BalanceOutcome decide_balance(const BalancingSystem& sys) {
  Unbalanced unbalanced;
  for (std::size_t k : sys.candidates) {
    const LinearSystem ls = to_linear_system(sys, k);
    FeasibilityOutcome out = solve_feasibility(ls);
    if (auto* feas = std::get_if<Feasible>(&out)) {
      return Balanced{scale_to_integers(feas->point), k};
    }
    const FarkasWitness& w = std::get<Infeasible>(out).farkas;
    BalanceFarkas bf;
    bf.candidate = k;
    bf.zero_multipliers.assign(sys.num_vars, 0);
    for (std::size_t i = 0; i < sys.zeroed.size(); ++i) {
      bf.zero_multipliers[sys.zeroed[i]] = w.eq_multipliers[i];
    }
    bf.kernel_multipliers.assign(w.eq_multipliers.begin() + static_cast<long>(sys.zeroed.size()),
                                 w.eq_multipliers.end());
    bf.flow_multipliers.assign(w.ge_multipliers.begin(),
                               w.ge_multipliers.begin() + static_cast<long>(sys.flows.size()));
    bf.positivity_multiplier = w.ge_multipliers.back();
    unbalanced.witnesses.push_back(std::move(bf));
  }
  return unbalanced;
}

namespace {

// Constraints rebuilt straight from the definitions, without BalancingSystem.
struct DirectConstraints {
  std::size_t num_vars = 0;
  std::vector<bool> in_forest;
  StoichMatrix gamma;
  std::vector<std::size_t> chosen;                 // per exterior choice
  std::vector<std::vector<std::size_t>> inflow;    // per exterior choice
  std::vector<std::size_t> candidates;
};

DirectConstraints direct_constraints(const ReactionNetwork& net, const DomCrn& dcrn,
                                     const ExteriorForest& forest, NontrivialityReading reading) {
  DirectConstraints dc;
  dc.num_vars = net.num_reactions() + dcrn.dom_edges.size();
  dc.in_forest.assign(dc.num_vars, false);
  for (const ForestChoice& c : forest.choices) dc.in_forest[c.label] = true;
  for (std::size_t k : forest.interior) dc.in_forest[k] = true;
  dc.gamma = stoich_matrix(net);
  for (const ForestChoice& c : forest.choices) {
    dc.chosen.push_back(c.label);
    std::vector<std::size_t> in;
    for (std::size_t j = 0; j < dc.num_vars; ++j) {
      if (dc.in_forest[j] && edge_ends(net, dcrn, j).to == c.complex) in.push_back(j);
    }
    dc.inflow.push_back(std::move(in));
    const bool true_reaction = c.label < net.num_reactions();
    if (true_reaction || reading == NontrivialityReading::kIncludeDomination) {
      dc.candidates.push_back(c.label);
    }
  }
  std::sort(dc.candidates.begin(), dc.candidates.end());
  return dc;
}

Audit audit_balanced(const DirectConstraints& dc, const Balanced& b) {
  if (b.alpha.size() != dc.num_vars) return Audit::fail("alpha has wrong length");
  for (std::size_t j = 0; j < dc.num_vars; ++j) {
    if (b.alpha[j] < 0) return Audit::fail("alpha is negative at index " + std::to_string(j));
    if (!dc.in_forest[j] && b.alpha[j] != 0) {
      return Audit::fail("support condition violated at index " + std::to_string(j));
    }
  }
  for (std::size_t i = 0; i < dc.gamma.rows(); ++i) {
    Integer sum = 0;
    for (std::size_t k = 0; k < dc.gamma.cols(); ++k) {
      sum += Integer(static_cast<long>(dc.gamma(i, k))) * b.alpha[k];
    }
    if (sum != 0) return Audit::fail("kernel row " + std::to_string(i) + " violated");
  }
  for (std::size_t f = 0; f < dc.chosen.size(); ++f) {
    Integer in = 0;
    for (std::size_t l : dc.inflow[f]) in += b.alpha[l];
    if (b.alpha[dc.chosen[f]] < in) return Audit::fail("flow condition " + std::to_string(f) + " violated");
  }
  if (std::find(dc.candidates.begin(), dc.candidates.end(), b.positive_edge) ==
      dc.candidates.end()) {
    return Audit::fail("positive edge is not an exterior candidate");
  }
  if (b.alpha[b.positive_edge] <= 0) return Audit::fail("alpha vanishes at the positive edge");
  return Audit::pass();
}

Audit audit_farkas(const DirectConstraints& dc, const BalanceFarkas& w) {
  if (w.zero_multipliers.size() != dc.num_vars ||
      w.kernel_multipliers.size() != dc.gamma.rows() ||
      w.flow_multipliers.size() != dc.chosen.size()) {
    return Audit::fail("witness has wrong shape");
  }
  if (w.candidate >= dc.num_vars) return Audit::fail("witness candidate out of range");
  if (w.positivity_multiplier <= 0) return Audit::fail("positivity multiplier is not positive");
  RationalVector coeff(dc.num_vars, 0);
  for (std::size_t j = 0; j < dc.num_vars; ++j) {
    if (dc.in_forest[j] && w.zero_multipliers[j] != 0) {
      return Audit::fail("multiplier on a forest edge's support row");
    }
    coeff[j] += w.zero_multipliers[j];
  }
  for (std::size_t i = 0; i < dc.gamma.rows(); ++i) {
    for (std::size_t k = 0; k < dc.gamma.cols(); ++k) {
      coeff[k] += w.kernel_multipliers[i] * static_cast<long>(dc.gamma(i, k));
    }
  }
  for (std::size_t f = 0; f < dc.chosen.size(); ++f) {
    if (w.flow_multipliers[f] < 0) return Audit::fail("negative flow multiplier");
    coeff[dc.chosen[f]] += w.flow_multipliers[f];
    for (std::size_t l : dc.inflow[f]) coeff[l] -= w.flow_multipliers[f];
  }
  coeff[w.candidate] += w.positivity_multiplier;
  for (std::size_t j = 0; j < dc.num_vars; ++j) {
    if (coeff[j] > 0) {
      return Audit::fail("combined coefficient positive at index " + std::to_string(j));
    }
  }
  return Audit::pass();
}

}  // namespace

Audit verify_balance_outcome(const ReactionNetwork& net, const DomCrn& dcrn,
                             const ExteriorForest& forest, const BalanceOutcome& outcome,
                             NontrivialityReading reading) {
  if (std::string defect = forest_defect(net, dcrn, forest); !defect.empty()) {
    return Audit::fail("invalid forest: " + defect);
  }
  const DirectConstraints dc = direct_constraints(net, dcrn, forest, reading);
  if (const auto* b = std::get_if<Balanced>(&outcome)) return audit_balanced(dc, *b);
  const auto& u = std::get<Unbalanced>(outcome);
  if (u.witnesses.size() != dc.candidates.size()) {
    return Audit::fail("expected one witness per candidate");
  }
  for (std::size_t i = 0; i < dc.candidates.size(); ++i) {
    if (u.witnesses[i].candidate != dc.candidates[i]) {
      return Audit::fail("witness " + std::to_string(i) + " names the wrong candidate");
    }
    if (Audit a = audit_farkas(dc, u.witnesses[i]); !a) {
      return Audit::fail("witness for " + std::to_string(dc.candidates[i]) + ": " + a.reason);
    }
  }
  return Audit::pass();
}

ForestScan scan_forests(const ReactionNetwork& net, const DomCrn& dcrn,
                        const std::vector<ExteriorForest>& forests,
                        NontrivialityReading reading, Execution exec,
                        bool stop_at_unbalanced) {
  ForestScan scan;
  auto decide = [&](std::size_t i) {
    return decide_balance(build_balancing_system(net, dcrn, forests[i], reading));
  };
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < forests.size(); ++i) {
      scan.outcomes.push_back(decide(i));
      if (!is_balanced(scan.outcomes.back()) && !scan.first_unbalanced) {
        scan.first_unbalanced = i;
        if (stop_at_unbalanced) break;
      }
    }
    return scan;
  }

  std::size_t block = 1;
#ifdef _OPENMP
  block = static_cast<std::size_t>(std::max(1, omp_get_max_threads())) * 4;
#endif
  for (std::size_t start = 0; start < forests.size(); start += block) {
    const std::size_t stop = std::min(forests.size(), start + block);
    std::vector<BalanceOutcome> part(stop - start);
    const long count = static_cast<long>(stop - start);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      part[static_cast<std::size_t>(i)] = decide(start + static_cast<std::size_t>(i));
    }
    for (std::size_t i = 0; i < part.size(); ++i) {
      scan.outcomes.push_back(std::move(part[i]));
      if (!is_balanced(scan.outcomes.back()) && !scan.first_unbalanced) {
        scan.first_unbalanced = start + i;
        if (stop_at_unbalanced) return scan;
      }
    }
  }
  return scan;
}

}  // namespace crnx
