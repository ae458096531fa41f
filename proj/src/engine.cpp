#include "crnx/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "crnx/errors.hpp"

namespace crnx {

std::string verdict_kind(const Verdict& v) {
  switch (v.index()) {
    case 0: return "GuaranteedExtinction";
    case 1: return "Inconclusive";
    default: return "NotApplicable";
  }
}

namespace {

// Proper subsets of `edges` by decreasing size, lexicographic within a size.
std::vector<std::vector<DominationEdge>> dom_subsets(const std::vector<DominationEdge>& edges,
                                                     std::size_t cap, bool& truncated) {
  std::vector<std::vector<DominationEdge>> out;
  const std::size_t d = edges.size();
  for (std::size_t size = d; size-- > 0;) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (out.size() >= cap) {
        truncated = true;
        return out;
      }
      std::vector<DominationEdge> subset;
      for (std::size_t i : idx) subset.push_back(edges[i]);
      out.push_back(std::move(subset));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == d - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

CandidateList search_candidates(const ReactionNetwork& net, const SearchConfig& cfg) {
  if (cfg.forest_cap < 1 || cfg.absorbing_cap < 1) {
    throw std::invalid_argument("search caps must be at least 1");
  }
  CandidateList list;
  const std::size_t n = net.num_complexes();
  std::set<std::pair<std::vector<DominationEdge>, ComplexSet>> seen;

  auto consider = [&](std::vector<DominationEdge> d, ComplexSet y) {
    if (y.size() == n) return;
    if (!seen.insert({d, y}).second) return;
    DomCrnResult r = build_dom_crn(net, std::move(d), std::move(y));
    if (auto* dc = std::get_if<DomCrn>(&r)) {
      list.candidates.push_back(std::move(*dc));
    } else {
      ++list.rejected;
    }
  };
  auto with_subsets = [&](const DomCrn& base) {
    consider(base.dom_edges, base.absorbing);
    if (cfg.dom != SearchConfig::Dom::kAllSubsets) return;
    for (auto& subset : dom_subsets(base.dom_edges, cfg.dom_subset_cap, list.dom_truncated)) {
      consider(std::move(subset), base.absorbing);
    }
  };
  auto take_notes = [&](const DomCrn& d) {
    list.notes.insert(list.notes.end(), d.notes.begin(), d.notes.end());
  };

  if (cfg.absorbing == SearchConfig::Absorbing::kExplicit) {
    ComplexSet y = cfg.explicit_absorbing;
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    for (std::size_t v : y) {
      if (v >= n) throw InputError("absorbing set names an unknown complex");
    }
    if (!is_absorbing_set(reaction_graph(net), y)) {
      throw InputError("explicit set is not absorbing in the reaction graph");
    }
    const DomCrn base = maximal_admissible_for(net, y);
    take_notes(base);
    with_subsets(base);
    return list;
  }

  const DomCrn seed = maximal_admissible(net);
  take_notes(seed);
  list.notes.push_back("search seeded with the maximal admissible dom-CRN (heuristic choice)");
  with_subsets(seed);
  if (cfg.absorbing == SearchConfig::Absorbing::kEnumerate) {
    const AbsorbingSets sets = enumerate_absorbing_sets(reaction_graph(net), cfg.absorbing_cap);
    list.absorbing_truncated = sets.truncated;
    for (const ComplexSet& y : sets.sets) with_subsets(maximal_admissible_for(net, y));
  }
  return list;
}

Analysis analyze_detailed(const ReactionNetwork& net, const SearchConfig& cfg) {
  const StoichMatrix gamma = stoich_matrix(net);
  FeasibilityOutcome sub = is_subconservative(gamma);
  if (auto* inf = std::get_if<Infeasible>(&sub)) {
    return {NotApplicable{"network is not subconservative", std::move(inf->farkas)}, {}};
  }
  const std::vector<Integer> c = scale_to_integers(std::get<Feasible>(sub).point);

  CandidateList list = search_candidates(net, cfg);
  SearchStats stats;
  stats.candidates_rejected = list.rejected;
  stats.absorbing_truncated = list.absorbing_truncated;
  stats.dom_truncated = list.dom_truncated;
  stats.notes = list.notes;

  Analysis analysis{Inconclusive{}, {}};
  std::optional<GuaranteedExtinction> found;
  for (DomCrn& cand : list.candidates) {
    const SlcCoincidenceReport slc = check_slc_coincidence(net, cand.dom_edges, true);
    if (slc.status == SlcCoincidenceReport::Status::kViolated) {
      throw std::logic_error("SLC coincidence failed on an admissible dom-CRN: " + slc.detail);
    }
    ++stats.candidates_examined;
    ForestEnumeration en = enumerate_forests(net, cand, cfg.forest_cap);
    stats.forest_truncated = stats.forest_truncated || en.truncated;
    ForestScan scan =
        scan_forests(net, cand, en.forests, cfg.reading, cfg.execution, !cfg.exhaustive);
    stats.forests_examined += scan.outcomes.size();
    stats.forests_balanced += static_cast<std::size_t>(
        std::count_if(scan.outcomes.begin(), scan.outcomes.end(),
                      [](const BalanceOutcome& o) { return is_balanced(o); }));
    if (scan.first_unbalanced && !found) {
      const std::size_t i = *scan.first_unbalanced;
      GuaranteedExtinction ge;
      ge.transient = complement(cand.absorbing, net.num_complexes());
      ge.certificate.dcrn = cand;
      ge.certificate.forest = en.forests[i];
      ge.certificate.witnesses = std::get<Unbalanced>(scan.outcomes[i]).witnesses;
      ge.certificate.conservation = c;
      ge.certificate.reading = cfg.reading;
      found = std::move(ge);
    }
    if (cfg.exhaustive) {
      analysis.records.push_back(
          {std::move(cand), std::move(en.forests), std::move(scan.outcomes), en.truncated});
    } else if (found) {
      break;
    }
  }
  if (found) {
    found->stats = std::move(stats);
    analysis.verdict = std::move(*found);
  } else {
    analysis.verdict = Inconclusive{std::move(stats)};
  }
  return analysis;
}

Verdict analyze(const ReactionNetwork& net, const SearchConfig& cfg) {
  SearchConfig c = cfg;
  c.exhaustive = false;
  return analyze_detailed(net, c).verdict;
}

Audit verify_verdict(const ReactionNetwork& net, const Verdict& verdict) {
  const StoichMatrix gamma = stoich_matrix(net);
  if (const auto* na = std::get_if<NotApplicable>(&verdict)) {
    if (!certifies_infeasibility(subconservation_system(gamma), na->witness)) {
      return Audit::fail("subconservation infeasibility witness does not verify");
    }
    return Audit::pass();
  }
  const auto* ge = std::get_if<GuaranteedExtinction>(&verdict);
  if (ge == nullptr) return Audit::fail("inconclusive verdicts carry no certificate");
  const ExtinctionCertificate& cert = ge->certificate;

  if (cert.conservation.size() != net.num_species()) {
    return Audit::fail("conservation vector has wrong length");
  }
  for (const Integer& ci : cert.conservation) {
    if (ci <= 0) return Audit::fail("conservation vector is not strictly positive");
  }
  for (std::size_t k = 0; k < gamma.cols(); ++k) {
    Integer sum = 0;
    for (std::size_t i = 0; i < gamma.rows(); ++i) {
      sum += cert.conservation[i] * static_cast<long>(gamma(i, k));
    }
    if (sum > 0) return Audit::fail("c^T Gamma is positive at reaction " + std::to_string(k + 1));
  }

  DomCrnResult dc = build_dom_crn(net, cert.dcrn.dom_edges, cert.dcrn.absorbing);
  if (const auto* bad = std::get_if<AdmissibilityViolation>(&dc)) {
    return Audit::fail("dom-CRN not admissible: " + bad->message);
  }
  const DomCrn& dcrn = std::get<DomCrn>(dc);
  if (ge->transient != complement(dcrn.absorbing, net.num_complexes())) {
    return Audit::fail("transient set is not the complement of Y");
  }
  if (ge->transient.empty()) return Audit::fail("transient set is empty");

  Audit forest = verify_balance_outcome(net, dcrn, cert.forest, Unbalanced{cert.witnesses},
                                        cert.reading);
  if (!forest) return Audit::fail("forest certificate: " + forest.reason);
  return Audit::pass();
}

}  // namespace crnx
