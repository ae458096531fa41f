#include "crnx/report.hpp"

#include <map>
#include <set>

#include "crnx/errors.hpp"

namespace crnx {

Json rational_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  try {
    Rational q(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    if (q.get_den() == 0) throw InputError("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational " + j.dump());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed rational: ") + e.what());
  }
}

namespace {

Json rationals_json(const RationalVector& v) {
  Json a = Json::array();
  for (const Rational& q : v) a.push_back(rational_json(q));
  return a;
}

RationalVector rationals_from_json(const Json& a) {
  RationalVector v;
  for (const Json& j : a) v.push_back(rational_from_json(j));
  return v;
}

std::size_t label_from_name(const ReactionNetwork& net, std::size_t num_dom,
                            const std::string& name) {
  try {
    if (name.size() >= 2 && (name[0] == 'R' || name[0] == 'D')) {
      const std::size_t k = std::stoul(name.substr(1));
      if (k >= 1) {
        if (name[0] == 'R' && k <= net.num_reactions()) return k - 1;
        if (name[0] == 'D' && k <= num_dom) return net.num_reactions() + k - 1;
      }
    }
  } catch (const std::exception&) {
  }
  throw InputError("unknown edge label '" + name + "'");
}

Json names_json(const ReactionNetwork& net, const ComplexSet& set) {
  Json a = Json::array();
  for (std::size_t v : set) a.push_back(net.complex_name(v));
  return a;
}

Json stats_json(const SearchStats& s) {
  return Json{{"candidates_examined", s.candidates_examined},
              {"candidates_rejected", s.candidates_rejected},
              {"forests_examined", s.forests_examined},
              {"forests_balanced", s.forests_balanced},
              {"truncated",
               {{"absorbing_sets", s.absorbing_truncated},
                {"dom_subsets", s.dom_truncated},
                {"forests", s.forest_truncated}}},
              {"notes", s.notes}};
}

SearchStats stats_from_json(const Json& j) {
  SearchStats s;
  s.candidates_examined = j.at("candidates_examined").get<std::size_t>();
  s.candidates_rejected = j.at("candidates_rejected").get<std::size_t>();
  s.forests_examined = j.at("forests_examined").get<std::size_t>();
  s.forests_balanced = j.at("forests_balanced").get<std::size_t>();
  s.absorbing_truncated = j.at("truncated").at("absorbing_sets").get<bool>();
  s.dom_truncated = j.at("truncated").at("dom_subsets").get<bool>();
  s.forest_truncated = j.at("truncated").at("forests").get<bool>();
  s.notes = j.at("notes").get<std::vector<std::string>>();
  return s;
}

std::string reaction_text(const ReactionNetwork& net, std::size_t k) {
  const Reaction& r = net.reactions()[k];
  return "R" + std::to_string(k + 1) + ": " + net.complex_name(r.source) + " -> " +
         net.complex_name(r.target);
}

}  // namespace

Json report_json(const ReactionNetwork& net, const Verdict& verdict) {
  Json j;
  j["verdict"] = verdict_kind(verdict);
  Json network;
  network["species"] = Json::array();
  for (const Species& s : net.species()) network["species"].push_back(s.name);
  network["complexes"] = Json::array();
  for (std::size_t v = 0; v < net.num_complexes(); ++v) {
    network["complexes"].push_back(net.complex_name(v));
  }
  network["reactions"] = Json::array();
  for (const Reaction& r : net.reactions()) {
    network["reactions"].push_back({{"source", r.source}, {"target", r.target}});
  }
  j["network"] = std::move(network);

  if (const auto* ge = std::get_if<GuaranteedExtinction>(&verdict)) {
    const ExtinctionCertificate& cert = ge->certificate;
    j["transient_complexes"] = names_json(net, ge->transient);
    j["transient_indices"] = ge->transient;
    Json dom = Json::array();
    for (std::size_t d = 0; d < cert.dcrn.dom_edges.size(); ++d) {
      const DominationEdge& e = cert.dcrn.dom_edges[d];
      dom.push_back({{"label", "D" + std::to_string(d + 1)},
                     {"from", e.from},
                     {"to", e.to},
                     {"from_name", net.complex_name(e.from)},
                     {"to_name", net.complex_name(e.to)}});
    }
    j["dom_edges"] = std::move(dom);
    j["absorbing_set"] = {{"indices", cert.dcrn.absorbing},
                          {"names", names_json(net, cert.dcrn.absorbing)}};
    Json choices = Json::array();
    for (const ForestChoice& c : cert.forest.choices) {
      choices.push_back({{"complex", c.complex},
                         {"complex_name", net.complex_name(c.complex)},
                         {"edge", edge_label_name(net, c.label)}});
    }
    Json interior = Json::array();
    for (std::size_t k : cert.forest.interior) interior.push_back(edge_label_name(net, k));
    Json edges = Json::array();
    for (std::size_t l : cert.forest.edges()) edges.push_back(edge_label_name(net, l));
    j["forest"] = {{"choices", choices}, {"interior", interior}, {"edges", edges}};
    j["nontriviality"] =
        cert.reading == NontrivialityReading::kTrueReactions ? "true-reactions" : "any";
    Json witnesses = Json::array();
    for (const BalanceFarkas& w : cert.witnesses) {
      witnesses.push_back({{"candidate", edge_label_name(net, w.candidate)},
                           {"zero_multipliers", rationals_json(w.zero_multipliers)},
                           {"kernel_multipliers", rationals_json(w.kernel_multipliers)},
                           {"flow_multipliers", rationals_json(w.flow_multipliers)},
                           {"positivity_multiplier", rational_json(w.positivity_multiplier)}});
    }
    j["farkas_witnesses"] = std::move(witnesses);
    Json c = Json::array();
    for (const Integer& ci : cert.conservation) c.push_back(rational_json(Rational(ci)));
    j["subconservation_witness"] = std::move(c);
    Json pathway = Json::array();
    for (const ForestChoice& ch : cert.forest.choices) {
      if (is_reaction_label(net, ch.label)) pathway.push_back(reaction_text(net, ch.label));
    }
    j["extinction_pathway"] = std::move(pathway);
    j["notes"] = cert.dcrn.notes;
    j["search"] = stats_json(ge->stats);
  } else if (const auto* inc = std::get_if<Inconclusive>(&verdict)) {
    j["search"] = stats_json(inc->stats);
  } else {
    const auto& na = std::get<NotApplicable>(verdict);
    j["reason"] = na.reason;
    j["farkas_witness"] = {{"eq_multipliers", rationals_json(na.witness.eq_multipliers)},
                           {"ge_multipliers", rationals_json(na.witness.ge_multipliers)}};
  }
  return j;
}

Verdict read_report(const ReactionNetwork& net, const Json& report) {
  try {
    const std::string kind = report.at("verdict").get<std::string>();
    if (kind == "NotApplicable") {
      NotApplicable na;
      na.reason = report.at("reason").get<std::string>();
      na.witness.eq_multipliers =
          rationals_from_json(report.at("farkas_witness").at("eq_multipliers"));
      na.witness.ge_multipliers =
          rationals_from_json(report.at("farkas_witness").at("ge_multipliers"));
      return na;
    }
    if (kind == "Inconclusive") return Inconclusive{stats_from_json(report.at("search"))};
    if (kind != "GuaranteedExtinction") throw InputError("unknown verdict kind '" + kind + "'");

    GuaranteedExtinction ge;
    ExtinctionCertificate& cert = ge.certificate;
    ge.transient = report.at("transient_indices").get<ComplexSet>();
    for (const Json& e : report.at("dom_edges")) {
      cert.dcrn.dom_edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>()});
    }
    cert.dcrn.absorbing = report.at("absorbing_set").at("indices").get<ComplexSet>();
    cert.dcrn.notes = report.at("notes").get<std::vector<std::string>>();
    const std::size_t num_dom = cert.dcrn.dom_edges.size();
    for (const Json& c : report.at("forest").at("choices")) {
      cert.forest.choices.push_back(
          {c.at("complex").get<std::size_t>(),
           label_from_name(net, num_dom, c.at("edge").get<std::string>())});
    }
    for (const Json& k : report.at("forest").at("interior")) {
      cert.forest.interior.push_back(label_from_name(net, num_dom, k.get<std::string>()));
    }
    const std::string reading = report.at("nontriviality").get<std::string>();
    if (reading == "true-reactions") {
      cert.reading = NontrivialityReading::kTrueReactions;
    } else if (reading == "any") {
      cert.reading = NontrivialityReading::kIncludeDomination;
    } else {
      throw InputError("unknown nontriviality reading '" + reading + "'");
    }
    for (const Json& w : report.at("farkas_witnesses")) {
      BalanceFarkas bf;
      bf.candidate = label_from_name(net, num_dom, w.at("candidate").get<std::string>());
      bf.zero_multipliers = rationals_from_json(w.at("zero_multipliers"));
      bf.kernel_multipliers = rationals_from_json(w.at("kernel_multipliers"));
      bf.flow_multipliers = rationals_from_json(w.at("flow_multipliers"));
      bf.positivity_multiplier = rational_from_json(w.at("positivity_multiplier"));
      cert.witnesses.push_back(std::move(bf));
    }
    for (const Json& c : report.at("subconservation_witness")) {
      const Rational q = rational_from_json(c);
      if (q.get_den() != 1) throw InputError("subconservation witness must be integral");
      cert.conservation.push_back(q.get_num());
    }
    ge.stats = stats_from_json(report.at("search"));
    return ge;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string report_text(const ReactionNetwork& net, const Verdict& verdict) {
  std::string out = "verdict: " + verdict_kind(verdict) + "\n";
  auto list = [&](const ComplexSet& s) {
    std::string t;
    for (std::size_t v : s) t += (t.empty() ? "" : ", ") + net.complex_name(v);
    return "{" + t + "}";
  };
  auto stats = [&](const SearchStats& s) {
    std::string t = "candidates examined: " + std::to_string(s.candidates_examined) +
                    ", forests examined: " + std::to_string(s.forests_examined) +
                    " (" + std::to_string(s.forests_balanced) + " balanced)\n";
    if (s.truncated()) t += "search truncated by a cap\n";
    return t;
  };
  if (const auto* ge = std::get_if<GuaranteedExtinction>(&verdict)) {
    const ExtinctionCertificate& cert = ge->certificate;
    out += "transient complexes: " + list(ge->transient) + "\n";
    out += "absorbing set Y: " + list(cert.dcrn.absorbing) + "\n";
    out += "domination edges:";
    if (cert.dcrn.dom_edges.empty()) out += " none";
    out += "\n";
    for (std::size_t d = 0; d < cert.dcrn.dom_edges.size(); ++d) {
      out += "  D" + std::to_string(d + 1) + ": " + describe(net, cert.dcrn.dom_edges[d]) + "\n";
    }
    out += "extinction pathway:\n";
    for (const ForestChoice& ch : cert.forest.choices) {
      if (is_reaction_label(net, ch.label)) out += "  " + reaction_text(net, ch.label) + "\n";
    }
    std::string forest;
    for (std::size_t l : cert.forest.edges()) {
      forest += (forest.empty() ? "" : ", ") + edge_label_name(net, l);
    }
    out += "unbalanced forest: {" + forest + "}\n";
    out += stats(ge->stats);
  } else if (const auto* inc = std::get_if<Inconclusive>(&verdict)) {
    out += stats(inc->stats);
  } else {
    out += "reason: " + std::get<NotApplicable>(verdict).reason + "\n";
  }
  return out;
}

std::string emit_report(const ReactionNetwork& net, const Verdict& verdict, ReportFormat format) {
  if (format == ReportFormat::kJson) return report_json(net, verdict).dump(2) + "\n";
  return report_text(net, verdict);
}

Json petri_export(const ReactionNetwork& net) {
  Json doc;
  doc["places"] = Json::array();
  for (const Species& s : net.species()) doc["places"].push_back(s.name);
  doc["transitions"] = Json::array();
  for (const Reaction& r : net.reactions()) {
    Json in = Json::object();
    Json out = Json::object();
    const Complex& src = net.complexes()[r.source];
    const Complex& tgt = net.complexes()[r.target];
    for (std::size_t i = 0; i < net.num_species(); ++i) {
      if (src.coeffs[i] != 0) in[net.species()[i].name] = src.coeffs[i];
      if (tgt.coeffs[i] != 0) out[net.species()[i].name] = tgt.coeffs[i];
    }
    doc["transitions"].push_back(
        {{"name", "R" + std::to_string(r.index + 1)}, {"inputs", in}, {"outputs", out}});
  }
  return doc;
}

ReactionNetwork petri_import(const Json& doc) {
  try {
    if (!doc.is_object()) throw InputError("Petri document must be an object");
    std::vector<std::string> places = doc.at("places").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < places.size(); ++i) {
      if (!index.emplace(places[i], i).second) throw InputError("duplicate place " + places[i]);
    }
    auto side = [&](const Json& arcs) {
      Complex c{std::vector<Count>(places.size(), 0)};
      if (arcs.is_null()) return c;
      if (!arcs.is_object()) throw InputError("arc map must be an object");
      for (const auto& [place, mult] : arcs.items()) {
        auto it = index.find(place);
        if (it == index.end()) throw InputError("unknown place '" + place + "'");
        if (!mult.is_number_integer()) throw InputError("multiplicity must be an integer");
        const Count n = mult.get<Count>();
        if (n < 0) throw InputError("negative multiplicity on place '" + place + "'");
        c.coeffs[it->second] = n;
      }
      return c;
    };
    std::vector<std::pair<Complex, Complex>> reactions;
    for (const Json& t : doc.at("transitions")) {
      const Json none;
      reactions.emplace_back(side(t.contains("inputs") ? t.at("inputs") : none),
                             side(t.contains("outputs") ? t.at("outputs") : none));
    }
    return build_network(std::move(places), reactions);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed Petri document: ") + e.what());
  }
}

}  // namespace crnx
