#include "crnx/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crnx/engine.hpp"
#include "crnx/errors.hpp"
#include "crnx/oracle.hpp"
#include "crnx/parser.hpp"
#include "crnx/report.hpp"

namespace crnx {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(what + " must be a positive integer");
  }
  const std::size_t n = std::stoul(text);
  if (n < 1) throw InputError(what + " must be a positive integer");
  return n;
}

NontrivialityReading parse_reading(const std::string& s) {
  if (s == "true-reactions") return NontrivialityReading::kTrueReactions;
  if (s == "any") return NontrivialityReading::kIncludeDomination;
  throw InputError("--nontriviality expects true-reactions or any");
}

std::string set_text(const ReactionNetwork& net, const ComplexSet& s) {
  std::string t;
  for (std::size_t v : s) t += (t.empty() ? "" : ", ") + net.complex_name(v);
  return "{" + t + "}";
}

std::string state_text(const ReactionNetwork& net, const State& x) {
  std::string t;
  for (std::size_t i = 0; i < x.size(); ++i) {
    t += (i ? "," : "") + net.species()[i].name + "=" + std::to_string(x[i]);
  }
  return t;
}

std::string vector_text(const std::vector<Integer>& v) {
  std::string t;
  for (const Integer& x : v) t += (t.empty() ? "" : ", ") + to_string(x);
  return "(" + t + ")";
}

struct AnalyzeOpts {
  std::string file;
  std::string dom = "maximal";
  std::string absorbing = "terminal";
  std::size_t forest_cap = kDefaultForestCap;
  std::string reading = "true-reactions";
  std::string json_out;
  bool serial = false;
};

int run_analyze(const AnalyzeOpts& o, std::ostream& out) {
  const ReactionNetwork net = parse_crn(read_file(o.file)).network;
  SearchConfig cfg;
  if (o.dom == "maximal") {
    cfg.dom = SearchConfig::Dom::kMaximalOnly;
  } else if (o.dom.rfind("all:", 0) == 0) {
    cfg.dom = SearchConfig::Dom::kAllSubsets;
    cfg.dom_subset_cap = parse_count(o.dom.substr(4), "--dom all:N");
  } else {
    throw InputError("--dom expects maximal or all:N");
  }
  if (o.absorbing == "terminal") {
    cfg.absorbing = SearchConfig::Absorbing::kTerminalOnly;
  } else if (o.absorbing.rfind("enumerate:", 0) == 0) {
    cfg.absorbing = SearchConfig::Absorbing::kEnumerate;
    cfg.absorbing_cap = parse_count(o.absorbing.substr(10), "--absorbing enumerate:N");
  } else if (o.absorbing.rfind("set:", 0) == 0) {
    cfg.absorbing = SearchConfig::Absorbing::kExplicit;
    cfg.explicit_absorbing = parse_complex_list(net, o.absorbing.substr(4));
  } else {
    throw InputError("--absorbing expects terminal, enumerate:N or set:LIST");
  }
  cfg.forest_cap = o.forest_cap;
  cfg.reading = parse_reading(o.reading);
  cfg.execution = o.serial ? Execution::kSerial : Execution::kParallel;

  const Verdict v = analyze(net, cfg);
  out << report_text(net, v);
  if (!o.json_out.empty()) {
    const std::string json = emit_report(net, v, ReportFormat::kJson);
    if (o.json_out == "-") {
      out << json;
    } else {
      std::ofstream f(o.json_out);
      if (!f) throw InputError("cannot write " + o.json_out);
      f << json;
    }
  }
  return kExitOk;
}

struct OracleOpts {
  std::string file;
  std::string init;
  Count budget = kDefaultBudget;
  std::size_t state_cap = kDefaultStateCap;
  std::string check;
};

int run_oracle(const OracleOpts& o, std::ostream& out) {
  const ReactionNetwork net = parse_crn(read_file(o.file)).network;
  std::optional<ComplexSet> yc;
  if (!o.check.empty()) yc = parse_complex_list(net, o.check);
  if (o.init.empty()) {
    if (!yc) throw InputError("oracle needs --init or --check-extinction");
    const ExtinctionSweep sweep = guaranteed_extinction_on(net, *yc, o.budget, o.state_cap);
    out << "extinction on " << set_text(net, *yc) << " from every state with total <= "
        << o.budget << ": " << (sweep.holds ? "yes" : "no") << " (" << sweep.roots_checked
        << " roots)\n";
    if (!sweep.holds) {
      out << "counterexample root: " << state_text(net, *sweep.counterexample_root) << "\n"
          << "recurrent complex: " << net.complex_name(*sweep.recurrent_complex)
          << " charged at " << state_text(net, *sweep.recurrent_witness) << "\n";
    }
    return kExitOk;
  }
  const State x0 = parse_state(net, o.init);
  const StateGraph g = explore(net, x0, o.state_cap);
  const std::vector<bool> rec = recurrent_states(g);
  out << "reachable states: " << g.states.size() << "\n";
  out << "recurrent states:\n";
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    if (rec[s]) out << "  " << state_text(net, g.states[s]) << "\n";
  }
  const SlcRecurrenceReport rep = slc_recurrence_report(net, g);
  out << "complexes:\n";
  for (std::size_t v = 0; v < net.num_complexes(); ++v) {
    out << "  " << net.complex_name(v) << ": "
        << (rep.complex_recurrent[v] ? "recurrent" : "transient") << "\n";
  }
  if (!rep.ok()) {
    for (const std::string& msg : rep.violations) out << "recurrence violation: " << msg << "\n";
  }
  if (yc) {
    out << "extinction on " << set_text(net, *yc) << ": "
        << (extinction_on(net, g, *yc) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_structure(const std::string& file, std::size_t cap, std::ostream& out) {
  const ReactionNetwork net = parse_crn(read_file(file)).network;
  const ReactionGraph g = reaction_graph(net);
  out << "species: ";
  for (const Species& s : net.species()) out << (s.index ? ", " : "") << s.name;
  out << "\ncomplexes:\n";
  for (std::size_t v = 0; v < net.num_complexes(); ++v) {
    out << "  y" << v + 1 << " = " << net.complex_name(v) << "\n";
  }
  out << "reactions:\n";
  for (const Reaction& r : net.reactions()) {
    out << "  R" << r.index + 1 << ": " << net.complex_name(r.source) << " -> "
        << net.complex_name(r.target) << "\n";
  }
  out << "linkage classes:";
  for (const ComplexSet& b : linkage_classes(g).blocks) out << " " << set_text(net, b);
  out << "\nstrong linkage classes:";
  for (const ComplexSet& b : strong_linkage_classes(g).blocks) out << " " << set_text(net, b);
  out << "\nterminal SLCs:";
  for (const ComplexSet& b : terminal_slcs(g)) out << " " << set_text(net, b);
  const AbsorbingSets sets = enumerate_absorbing_sets(g, cap);
  out << "\nabsorbing sets" << (sets.truncated ? " (truncated)" : "") << ":\n";
  for (const ComplexSet& s : sets.sets) out << "  " << set_text(net, s) << "\n";
  return kExitOk;
}

int run_invariants(const std::string& file, std::ostream& out) {
  const ReactionNetwork net = parse_crn(read_file(file)).network;
  const StoichMatrix gamma = stoich_matrix(net);
  out << "stoichiometric matrix:\n";
  for (const auto& row : gamma.to_rows()) {
    out << " ";
    for (Count v : row) out << " " << v;
    out << "\n";
  }
  auto verdict = [&](const char* name, const FeasibilityOutcome& o) {
    out << name << ": ";
    if (const auto* f = std::get_if<Feasible>(&o)) {
      out << "yes, c = " << vector_text(scale_to_integers(f->point)) << "\n";
    } else {
      out << "no\n";
    }
  };
  verdict("conservative", is_conservative(gamma));
  verdict("subconservative", is_subconservative(gamma));
  out << "P-invariants:\n";
  for (const auto& ray : p_invariants(gamma).rays) out << "  " << vector_text(ray) << "\n";
  out << "T-invariants (nonnegative kernel rays):\n";
  for (const auto& ray : t_invariants(gamma).rays) out << "  " << vector_text(ray) << "\n";
  return kExitOk;
}

int run_forests(const std::string& file, std::size_t cap, const std::string& reading,
                std::ostream& out) {
  const ReactionNetwork net = parse_crn(read_file(file)).network;
  const DomCrn dcrn = maximal_admissible(net);
  const NontrivialityReading rd = parse_reading(reading);
  out << "maximal admissible dom-CRN:\n";
  for (std::size_t d = 0; d < dcrn.dom_edges.size(); ++d) {
    out << "  D" << d + 1 << ": " << describe(net, dcrn.dom_edges[d]) << "\n";
  }
  out << "  Y = " << set_text(net, dcrn.absorbing) << "\n";
  for (const std::string& n : dcrn.notes) out << "  note: " << n << "\n";
  const ForestEnumeration en = enumerate_forests(net, dcrn, cap);
  out << "forests" << (en.truncated ? " (truncated)" : "") << ":\n";
  for (const ExteriorForest& f : en.forests) {
    std::string edges;
    for (std::size_t l : f.edges()) edges += (edges.empty() ? "" : ", ") + edge_label_name(net, l);
    const BalanceOutcome o = decide_balance(build_balancing_system(net, dcrn, f, rd));
    out << "  {" << edges << "}: ";
    if (const auto* b = std::get_if<Balanced>(&o)) {
      out << "balanced, alpha = " << vector_text(b->alpha) << "\n";
    } else {
      out << "unbalanced\n";
    }
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural extinction analysis for chemical reaction networks"};
  app.require_subcommand(1);

  AnalyzeOpts an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Search for an unbalanced exterior forest");
  analyze_cmd->add_option("file", an.file, "Network file")->required();
  analyze_cmd->add_option("--dom", an.dom, "maximal | all:N");
  analyze_cmd->add_option("--absorbing", an.absorbing, "terminal | enumerate:N | set:LIST");
  analyze_cmd->add_option("--forest-cap", an.forest_cap)->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--nontriviality", an.reading, "true-reactions | any");
  analyze_cmd->add_option("--json", an.json_out, "Write the JSON report ('-' for stdout)");
  analyze_cmd->add_flag("--serial", an.serial, "Disable parallel forest decisions");

  OracleOpts orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Explore the discrete state space");
  oracle_cmd->add_option("file", orc.file)->required();
  oracle_cmd->add_option("--init", orc.init, "Initial state, e.g. X1=2,X2=0");
  oracle_cmd->add_option("--budget", orc.budget)->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--state-cap", orc.state_cap)->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--check-extinction", orc.check, "Complexes, e.g. 2X1,X1+X2");

  std::string file;
  std::size_t cap = 64;
  auto* structure_cmd = app.add_subcommand("structure", "Graph structure of the network");
  structure_cmd->add_option("file", file)->required();
  structure_cmd->add_option("--absorbing-cap", cap)->check(CLI::PositiveNumber);

  auto* invariants_cmd = app.add_subcommand("invariants", "Conservation and P-/T-invariants");
  invariants_cmd->add_option("file", file)->required();

  std::size_t forest_cap = kDefaultForestCap;
  std::string reading = "true-reactions";
  auto* forests_cmd = app.add_subcommand("forests", "Forests of the maximal dom-CRN");
  forests_cmd->add_option("file", file)->required();
  forests_cmd->add_option("--forest-cap", forest_cap)->check(CLI::PositiveNumber);
  forests_cmd->add_option("--nontriviality", reading);

  std::string direction;
  auto* petri_cmd = app.add_subcommand("petri", "Convert to or from the Petri JSON form");
  petri_cmd->add_option("direction", direction)->required()->check(
      CLI::IsMember({"export", "import"}));
  petri_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(an, out);
    if (*oracle_cmd) return run_oracle(orc, out);
    if (*structure_cmd) return run_structure(file, cap, out);
    if (*invariants_cmd) return run_invariants(file, out);
    if (*forests_cmd) return run_forests(file, forest_cap, reading, out);
    if (direction == "export") {
      out << petri_export(parse_crn(read_file(file)).network).dump(2) << "\n";
    } else {
      Json doc;
      try {
        doc = Json::parse(read_file(file));
      } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
      }
      out << print_crn(petri_import(doc));
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  }
}

}  // namespace crnx
