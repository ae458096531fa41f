#include "crnx/domination.hpp"

#include <algorithm>
#include <set>

namespace crnx {

std::vector<DominationEdge> domination_set(const ReactionNetwork& net) {
  std::vector<DominationEdge> out;
  const auto& cs = net.complexes();
  for (std::size_t from = 0; from < cs.size(); ++from) {
    for (std::size_t to = 0; to < cs.size(); ++to) {
      if (from != to && cs[to].leq(cs[from])) out.push_back({from, to});
    }
  }
  return out;
}

ReactionGraph dom_graph(const ReactionNetwork& net,
                        const std::vector<DominationEdge>& dom_edges) {
  ReactionGraph g = reaction_graph(net);
  for (std::size_t d = 0; d < dom_edges.size(); ++d) {
    g.edges.push_back(GraphEdge{dom_edges[d].from, dom_edges[d].to, net.num_reactions() + d});
  }
  return g;
}

std::string describe(const ReactionNetwork& net, const DominationEdge& e) {
  return net.complex_name(e.from) + " => " + net.complex_name(e.to);
}

namespace {

bool duplicates_reaction(const ReactionNetwork& net, const DominationEdge& e) {
  return std::any_of(net.reactions().begin(), net.reactions().end(),
                     [&](const Reaction& r) { return r.source == e.from && r.target == e.to; });
}

std::vector<DominationEdge> without_reaction_duplicates(const ReactionNetwork& net,
                                                        std::vector<DominationEdge> edges,
                                                        std::vector<std::string>& notes) {
  std::vector<DominationEdge> kept;
  for (const DominationEdge& e : edges) {
    if (duplicates_reaction(net, e)) {
      notes.push_back("dropped " + describe(net, e) + ": coincides with a reaction");
    } else {
      kept.push_back(e);
    }
  }
  return kept;
}

}  // namespace

DomCrnResult build_dom_crn(const ReactionNetwork& net,
                           std::vector<DominationEdge> dom_edges,
                           ComplexSet absorbing) {
  using Kind = AdmissibilityViolation::Kind;
  const std::size_t n = net.num_complexes();
  std::sort(absorbing.begin(), absorbing.end());
  absorbing.erase(std::unique(absorbing.begin(), absorbing.end()), absorbing.end());
  for (std::size_t v : absorbing) {
    if (v >= n) {
      return AdmissibilityViolation{Kind::kInvalidComplex, std::nullopt,
                                    "absorbing set names complex " + std::to_string(v) +
                                        " outside the network"};
    }
  }
  const auto& cs = net.complexes();
  for (const DominationEdge& e : dom_edges) {
    if (e.from >= n || e.to >= n) {
      return AdmissibilityViolation{Kind::kInvalidComplex, e, "edge endpoint outside the network"};
    }
    if (e.from == e.to || !cs[e.to].leq(cs[e.from])) {
      return AdmissibilityViolation{Kind::kNotDomination, e,
                                    describe(net, e) + " is not a domination relation"};
    }
    if (duplicates_reaction(net, e)) {
      return AdmissibilityViolation{Kind::kDuplicatesReaction, e,
                                    describe(net, e) + " coincides with a reaction"};
    }
    if (contains(absorbing, e.to)) {
      return AdmissibilityViolation{Kind::kTargetsAbsorbing, e,
                                    describe(net, e) + " leads into the absorbing set"};
    }
  }
  std::set<DominationEdge> unique(dom_edges.begin(), dom_edges.end());
  if (unique.size() != dom_edges.size()) {
    return AdmissibilityViolation{Kind::kNotDomination, std::nullopt, "repeated domination edge"};
  }
  if (!is_absorbing_set(dom_graph(net, dom_edges), absorbing)) {
    return AdmissibilityViolation{Kind::kNotAbsorbing, std::nullopt,
                                  "set is not absorbing in the dom-CRN"};
  }
  return DomCrn{std::move(dom_edges), std::move(absorbing), {}};
}

DomCrn maximal_admissible(const ReactionNetwork& net) {
  DomCrn out;
  std::vector<DominationEdge> edges =
      without_reaction_duplicates(net, domination_set(net), out.notes);
  while (true) {
    ComplexSet terminal = terminal_complexes(dom_graph(net, edges));
    std::vector<DominationEdge> kept;
    for (const DominationEdge& e : edges) {
      if (!contains(terminal, e.to)) kept.push_back(e);
    }
    if (kept.size() == edges.size()) {
      out.dom_edges = std::move(edges);
      out.absorbing = std::move(terminal);
      return out;
    }
    edges = std::move(kept);
  }
}

DomCrn maximal_admissible_for(const ReactionNetwork& net, const ComplexSet& absorbing) {
  DomCrn out;
  out.absorbing = absorbing;
  std::sort(out.absorbing.begin(), out.absorbing.end());
  for (const DominationEdge& e :
       without_reaction_duplicates(net, domination_set(net), out.notes)) {
    if (!contains(out.absorbing, e.from) && !contains(out.absorbing, e.to)) {
      out.dom_edges.push_back(e);
    }
  }
  return out;
}

SlcCoincidenceReport check_slc_coincidence(const ReactionNetwork& net,
                            const std::vector<DominationEdge>& dom_edges,
                            bool subconservative) {
  using Status = SlcCoincidenceReport::Status;
  if (!subconservative) {
    return {Status::kNotApplicable, "network is not subconservative"};
  }
  const ReactionGraph base = reaction_graph(net);
  const ReactionGraph expanded = dom_graph(net, dom_edges);
  const Partition base_slcs = strong_linkage_classes(base);
  const Partition dom_slcs = strong_linkage_classes(expanded);
  if (base_slcs.blocks != dom_slcs.blocks) {
    for (const ComplexSet& block : dom_slcs.blocks) {
      if (std::find(base_slcs.blocks.begin(), base_slcs.blocks.end(), block) ==
          base_slcs.blocks.end()) {
        std::string names;
        for (std::size_t v : block) names += (names.empty() ? "" : ", ") + net.complex_name(v);
        return {Status::kViolated, "dom-CRN SLC {" + names + "} is not an SLC of the network"};
      }
    }
    return {Status::kViolated, "SLC partitions differ"};
  }
  const auto base_terminal = terminal_slcs(base, base_slcs);
  for (const ComplexSet& block : terminal_slcs(expanded, dom_slcs)) {
    if (std::find(base_terminal.begin(), base_terminal.end(), block) == base_terminal.end()) {
      return {Status::kViolated,
              "terminal dom-CRN SLC containing " + net.complex_name(block.front()) +
                  " is not terminal in the network"};
    }
  }
  return {Status::kHolds, ""};
}

}  // namespace crnx
