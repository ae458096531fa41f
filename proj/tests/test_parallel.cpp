#include <doctest.h>

#include "crnx/engine.hpp"
#include "crnx/oracle.hpp"
#include "fixtures.hpp"

using namespace crnx;
using testing::load;

TEST_CASE("parallel forest scan matches the serial reference") {
  for (const char* name : {"exchange", "envz", "example000", "example100", "example101"}) {
    const ReactionNetwork net = load(name);
    const DomCrn dcrn = maximal_admissible(net);
    const auto forests = enumerate_forests(net, dcrn).forests;
    for (bool stop : {true, false}) {
      const ForestScan s = scan_forests(net, dcrn, forests, NontrivialityReading::kTrueReactions,
                                        Execution::kSerial, stop);
      const ForestScan p = scan_forests(net, dcrn, forests, NontrivialityReading::kTrueReactions,
                                        Execution::kParallel, stop);
      CHECK(s.first_unbalanced == p.first_unbalanced);
      REQUIRE(s.outcomes.size() == p.outcomes.size());
      for (std::size_t i = 0; i < s.outcomes.size(); ++i) {
        REQUIRE(s.outcomes[i].index() == p.outcomes[i].index());
        if (const auto* b = std::get_if<Balanced>(&s.outcomes[i])) {
          CHECK(b->alpha == std::get<Balanced>(p.outcomes[i]).alpha);
        }
      }
    }
  }
}

TEST_CASE("parallel sweep matches the serial reference on EnvZ") {
  const ReactionNetwork net = load("envz");
  ComplexSet yc;
  for (std::size_t v = 0; v < net.num_complexes(); ++v)
    if (v != testing::cx(net, "X4")) yc.push_back(v);
  const auto s = guaranteed_extinction_on(net, yc, 3, kDefaultStateCap, Execution::kSerial);
  const auto p = guaranteed_extinction_on(net, yc, 3, kDefaultStateCap, Execution::kParallel);
  CHECK(s.holds == p.holds);
  CHECK(s.roots_checked == p.roots_checked);
  CHECK(s.counterexample_root == p.counterexample_root);
}
