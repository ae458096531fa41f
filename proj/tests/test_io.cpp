#include <doctest.h>

#include <sstream>

#include "crnx/cli.hpp"
#include "crnx/errors.hpp"
#include "crnx/report.hpp"
#include "fixtures.hpp"

using namespace crnx;
using testing::load;

namespace {
const char* const kFixtures[] = {"competition",      "exchange",       "crossfeed",       "leaky",
                                 "envz",       "example000", "example001", "example999",
                                 "example100", "example101"};

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "crnx");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}
}  // namespace

TEST_CASE("parser examples") {
  const ReactionNetwork comp =
      parse_crn("2 X1 -> X1 + X2\nX1 + X2 -> 2 X1\nX1 + X2 -> 2 X2").network;
  CHECK(comp.num_reactions() == 3);
  CHECK(stoich_matrix(comp) == stoich_matrix(load("competition")));
  const ReactionNetwork e21 = parse_crn("X1 + X2 <-> 2 X2\nX2 -> X1").network;
  CHECK(e21.num_reactions() == 3);
  CHECK(e21.complex_name(e21.reactions()[1].source) == "2 X2");
  const ReactionNetwork loop = parse_crn("X1 -> X1").network;
  CHECK(loop.num_complexes() == 1);
  const ReactionNetwork zero = parse_crn("0 -> A # inflow\n\n# comment\nA->0").network;
  CHECK(zero.num_reactions() == 2);
  CHECK(zero.complexes()[0].is_zero());
  CHECK(parse_crn("2X1 -> X2").network.complex_name(0) == "2 X1");
}

TEST_CASE("parser diagnostics") {
  auto message = [](const char* text) {
    try {
      parse_crn(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("A -> B\nA => B") == "line 2, column 3: unknown arrow token '=>'");
  CHECK(message("0 A -> B").find("coefficient must be positive") != std::string::npos);
  CHECK(message("-1 A -> B").find("negative coefficient") != std::string::npos);
  CHECK(message("A -> B C").find("trailing") != std::string::npos);
  CHECK(message("A + -> B").find("line 1, column 5") != std::string::npos);
  CHECK(message("A <- B").find("unknown arrow") != std::string::npos);
}

TEST_CASE("parse and print round-trip on all fixtures") {
  for (const char* name : kFixtures) {
    const ReactionNetwork net = load(name);
    const std::string printed = print_crn(net);
    const ReactionNetwork again = parse_crn(printed).network;
    CHECK(print_crn(again) == printed);
    CHECK(again.complexes() == net.complexes());
    CHECK(stoich_matrix(again) == stoich_matrix(net));
  }
}

TEST_CASE("Petri round-trip on all fixtures") {
  for (const char* name : kFixtures) {
    const ReactionNetwork net = load(name);
    const ReactionNetwork back = petri_import(petri_export(net));
    CHECK(stoich_matrix(back) == stoich_matrix(net));
    CHECK(back.complexes() == net.complexes());
    CHECK(print_crn(back) == print_crn(net));
  }
}

TEST_CASE("Petri documents") {
  const Json e21 = petri_export(load("exchange"));
  CHECK(e21["places"] == Json::array({"X1", "X2"}));
  CHECK(stoich_matrix(petri_import(e21)).to_rows() ==
        std::vector<std::vector<Count>>{{-1, 1, 1}, {1, -1, -1}});

  const Json no_outputs = Json::parse(R"({"places":["A"],"transitions":[{"inputs":{"A":1}}]})");
  const ReactionNetwork sink = petri_import(no_outputs);
  CHECK(sink.complexes()[sink.reactions()[0].target].is_zero());

  CHECK_THROWS_AS(petri_import(Json::parse(R"({"places":["A"],"transitions":[{"inputs":{"A":-1}}]})")),
                  InputError);
  CHECK_THROWS_AS(petri_import(Json::parse(R"({"places":["A"],"transitions":[{"inputs":{"B":1}}]})")),
                  InputError);
  CHECK_THROWS_AS(petri_import(Json::parse(R"([1,2])")), InputError);
  CHECK_THROWS_AS(petri_import(Json::parse(R"({"transitions":[]})")), InputError);
}

TEST_CASE("rationals serialize exactly") {
  const Rational q(Integer("-123456789012345678901234567891"), Integer("7"));
  const Json j = rational_json(q);
  CHECK(j["num"] == "-123456789012345678901234567891");
  CHECK(j["den"] == "7");
  CHECK(rational_from_json(j) == q);
  CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), InputError);
  CHECK_THROWS_AS(rational_from_json(Json{{"num", "x"}, {"den", "1"}}), InputError);
}

TEST_CASE("EnvZ report content and self-containment") {
  const ReactionNetwork net = load("envz");
  const Verdict v = analyze(net);
  const Json j = report_json(net, v);
  CHECK(j["verdict"] == "GuaranteedExtinction");
  CHECK(j["transient_complexes"].size() == 12);
  CHECK(j["forest"]["edges"] == Json::array({"R1", "R3", "R5", "R6", "R8", "R10", "R13", "D1",
                                             "D2", "D3", "D4", "D5"}));
  const Verdict back = read_report(net, Json::parse(j.dump()));
  CHECK(verify_verdict(net, back));
  CHECK(report_json(net, back) == j);

  const std::string text = report_text(net, v);
  CHECK(text.find("R5: X3 -> X4") != std::string::npos);
}

TEST_CASE("other report kinds") {
  const ReactionNetwork e22 = load("crossfeed");
  const Json na = report_json(e22, analyze(e22));
  CHECK(na["verdict"] == "NotApplicable");
  CHECK(na.contains("farkas_witness"));
  CHECK(verify_verdict(e22, read_report(e22, na)));

  const ReactionNetwork e100 = load("example100");
  const Json inc = report_json(e100, analyze(e100));
  CHECK(inc["verdict"] == "Inconclusive");
  CHECK(inc.contains("search"));
  CHECK_FALSE(inc.contains("farkas_witnesses"));
  CHECK(std::holds_alternative<Inconclusive>(read_report(e100, inc)));
  CHECK_THROWS_AS(read_report(e100, Json{{"verdict", "Maybe"}}), InputError);
}

TEST_CASE("command line") {
  std::string out;
  CHECK(run({"analyze", testing::fixture_path("envz"), "--json", "-"}, &out) == 0);
  CHECK(out.find("verdict: GuaranteedExtinction") != std::string::npos);
  CHECK(out.find("\"farkas_witnesses\"") != std::string::npos);

  CHECK(run({"oracle", testing::fixture_path("competition"), "--init", "X1=3,X2=1", "--check-extinction",
             "2X1,X1+X2"},
            &out) == 0);
  CHECK(out.find("extinction on {2 X1, X1 + X2}: yes") != std::string::npos);

  CHECK(run({"oracle", testing::fixture_path("example101"), "--check-extinction", "X1,X2+X4",
             "--budget", "4"},
            &out) == 0);
  CHECK(out.find("counterexample root") != std::string::npos);

  CHECK(run({"analyze", testing::fixture_path("bad")}, &out) == 2);
  CHECK(out.find("line 1") != std::string::npos);
  CHECK(run({"analyze", "/nonexistent.crn"}) == 2);
  CHECK(run({"analyze", testing::fixture_path("envz"), "--dom", "some"}) == 2);
  CHECK(run({"frobnicate"}) == 2);

  CHECK(run({"oracle", testing::fixture_path("competition"), "--init", "X1=3", "--state-cap", "2"}) == 3);

  CHECK(run({"structure", testing::fixture_path("crossfeed")}, &out) == 0);
  CHECK(out.find("{X1, 2 X2, 2 X1}") != std::string::npos);
  CHECK(run({"invariants", testing::fixture_path("exchange")}, &out) == 0);
  CHECK(out.find("(1, 0, 1)") != std::string::npos);
  CHECK(run({"forests", testing::fixture_path("exchange")}, &out) == 0);
  CHECK(out.find("balanced, alpha = (1, 0, 1, 0, 1)") != std::string::npos);
  CHECK(run({"analyze", testing::fixture_path("example000"), "--absorbing", "set:X2+X3,2X3,2X2"},
            &out) == 0);
  CHECK(out.find("transient complexes: {2 X1}") != std::string::npos);
  CHECK(run({"analyze", testing::fixture_path("example000"), "--dom", "all:4", "--absorbing",
             "enumerate:8", "--nontriviality", "any", "--serial"}) == 0);
  CHECK(run({"petri", "export", testing::fixture_path("exchange")}, &out) == 0);
  CHECK(Json::parse(out)["places"].size() == 2);
}
