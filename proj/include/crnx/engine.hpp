#pragma once

// Search over admissible dom-CRNs and their exterior forests; an unbalanced
// forest of a subconservative network yields a guaranteed extinction event on
// the complement of the absorbing set.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "crnx/domination.hpp"
#include "crnx/forest.hpp"
#include "crnx/linear.hpp"

namespace crnx {

struct SearchConfig {
  enum class Dom { kMaximalOnly, kAllSubsets };
  enum class Absorbing { kTerminalOnly, kEnumerate, kExplicit };

  Dom dom = Dom::kMaximalOnly;
  std::size_t dom_subset_cap = 64;  // extra subsets per base candidate
  Absorbing absorbing = Absorbing::kTerminalOnly;
  std::size_t absorbing_cap = 64;
  ComplexSet explicit_absorbing;
  std::size_t forest_cap = kDefaultForestCap;
  NontrivialityReading reading = NontrivialityReading::kTrueReactions;
  Execution execution = Execution::kParallel;
  // Examine every candidate and forest instead of stopping at the first
  // unbalanced forest; the verdict is unchanged.
  bool exhaustive = false;
};

struct SearchStats {
  std::size_t candidates_examined = 0;
  std::size_t candidates_rejected = 0;
  std::size_t forests_examined = 0;
  std::size_t forests_balanced = 0;
  bool absorbing_truncated = false;
  bool dom_truncated = false;
  bool forest_truncated = false;
  std::vector<std::string> notes;

  bool truncated() const { return absorbing_truncated || dom_truncated || forest_truncated; }
};

struct ExtinctionCertificate {
  DomCrn dcrn;
  ExteriorForest forest;
  std::vector<BalanceFarkas> witnesses;
  std::vector<Integer> conservation;  // c > 0 with c^T Gamma <= 0
  NontrivialityReading reading = NontrivialityReading::kTrueReactions;
};

struct GuaranteedExtinction {
  ComplexSet transient;
  ExtinctionCertificate certificate;
  SearchStats stats;
};

struct Inconclusive {
  SearchStats stats;
};

struct NotApplicable {
  std::string reason;
  FarkasWitness witness;  // against subconservation_system(Gamma)
};

using Verdict = std::variant<GuaranteedExtinction, Inconclusive, NotApplicable>;

std::string verdict_kind(const Verdict& v);

struct CandidateList {
  std::vector<DomCrn> candidates;
  std::size_t rejected = 0;
  bool absorbing_truncated = false;
  bool dom_truncated = false;
  std::vector<std::string> notes;
};

// Admissible (D, Y) pairs in search order, duplicates and Y = C removed.
// Throws InputError when an explicit Y is not absorbing.
CandidateList search_candidates(const ReactionNetwork& net, const SearchConfig& cfg);

struct CandidateRecord {
  DomCrn dcrn;
  std::vector<ExteriorForest> forests;
  std::vector<BalanceOutcome> outcomes;  // aligned with the decided prefix of forests
  bool forest_truncated = false;
};

struct Analysis {
  Verdict verdict;
  std::vector<CandidateRecord> records;  // filled only in exhaustive mode
};

Analysis analyze_detailed(const ReactionNetwork& net, const SearchConfig& cfg);
Verdict analyze(const ReactionNetwork& net, const SearchConfig& cfg = {});

// Audits a GuaranteedExtinction or NotApplicable verdict from the network
// alone. Inconclusive verdicts carry nothing to audit and fail.
Audit verify_verdict(const ReactionNetwork& net, const Verdict& verdict);

}  // namespace crnx
