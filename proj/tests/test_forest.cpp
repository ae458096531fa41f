#include <doctest.h>

#include "crnx/forest.hpp"
#include "fixtures.hpp"

using namespace crnx;
using testing::cset;
using testing::cx;
using testing::load;

namespace {

std::vector<std::string> names(const ReactionNetwork& net, const std::vector<std::size_t>& labels) {
  std::vector<std::string> out;
  for (std::size_t l : labels) out.push_back(edge_label_name(net, l));
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

struct Exchange {
  ReactionNetwork net = load("exchange");
  DomCrn dcrn = maximal_admissible(net);
  // Labels: R1 R2 R3 = 0 1 2, D1 = X1+X2 => X2 = 3, D2 = 2X2 => X2 = 4.
  ExteriorForest left{{{0, 0}, {1, 4}, {2, 2}}, {}};
  ExteriorForest right{{{0, 3}, {1, 1}, {2, 2}}, {}};
};

}  // namespace

TEST_CASE("exchange forests include both reference forests, left first") {
  Exchange ex;
  const ForestEnumeration en = enumerate_forests(ex.net, ex.dcrn);
  CHECK_FALSE(en.truncated);
  REQUIRE(en.forests.size() == 3);
  CHECK(en.forests[0] == ex.left);
  CHECK(en.forests[1] == ex.right);
  CHECK(names(ex.net, ex.left.edges()) == std::vector<std::string>{"R1", "R3", "D2"});
  CHECK(names(ex.net, ex.right.edges()) == std::vector<std::string>{"R2", "R3", "D1"});
  for (const ExteriorForest& f : en.forests) CHECK(forest_defect(ex.net, ex.dcrn, f).empty());
}

TEST_CASE("exchange balancing systems and outcomes") {
  Exchange ex;
  const BalancingSystem left = build_balancing_system(ex.net, ex.dcrn, ex.left);
  CHECK(left.zeroed == std::vector<std::size_t>{1, 3});
  REQUIRE(left.flows.size() == 3);
  CHECK(left.flows[0].inflow.empty());
  CHECK(left.flows[1].chosen == 4);
  CHECK(left.flows[1].inflow == std::vector<std::size_t>{0});
  CHECK(left.flows[2].chosen == 2);
  CHECK(left.flows[2].inflow == std::vector<std::size_t>{4});
  CHECK(left.candidates == std::vector<std::size_t>{0, 2});

  const BalanceOutcome lo = decide_balance(left);
  REQUIRE(is_balanced(lo));
  CHECK(std::get<Balanced>(lo).alpha == ints({1, 0, 1, 0, 1}));
  CHECK(verify_balance_outcome(ex.net, ex.dcrn, ex.left, lo));

  const BalanceOutcome reference = Balanced{ints({1, 0, 1, 0, 1}), 0};
  CHECK(verify_balance_outcome(ex.net, ex.dcrn, ex.left, reference));
  const Audit broken =
      verify_balance_outcome(ex.net, ex.dcrn, ex.left, Balanced{ints({1, 0, 0, 0, 1}), 0});
  CHECK_FALSE(broken);
  CHECK(broken.reason.find("kernel") != std::string::npos);

  const BalanceOutcome ro = decide_balance(build_balancing_system(ex.net, ex.dcrn, ex.right));
  REQUIRE_FALSE(is_balanced(ro));
  CHECK(std::get<Unbalanced>(ro).witnesses.size() == 2);
  CHECK(verify_balance_outcome(ex.net, ex.dcrn, ex.right, ro));
  CHECK_FALSE(verify_balance_outcome(ex.net, ex.dcrn, ex.left, ro));
}

TEST_CASE("example999 has one unbalanced forest whose relaxation is feasible") {
  const ReactionNetwork net = load("example999");
  const DomCrn dcrn = maximal_admissible(net);
  CHECK(dcrn.dom_edges.empty());
  const ForestEnumeration en = enumerate_forests(net, dcrn);
  REQUIRE(en.forests.size() == 1);
  CHECK(names(net, en.forests[0].edges()) == std::vector<std::string>{"R1", "R3"});

  const BalancingSystem sys = build_balancing_system(net, dcrn, en.forests[0]);
  CHECK(sys.zeroed == std::vector<std::size_t>{1});
  CHECK(sys.kernel_rows[0] == std::vector<Count>{1, -1, -2});
  REQUIRE(sys.flows.size() == 2);
  CHECK(sys.flows[1].chosen == 2);
  CHECK(sys.flows[1].inflow == std::vector<std::size_t>{0});

  const BalanceOutcome o = decide_balance(sys);
  CHECK_FALSE(is_balanced(o));
  CHECK(verify_balance_outcome(net, dcrn, en.forests[0], o));

  const LinearSystem relaxed = to_linear_system(sys, 0, false);
  CHECK(satisfies(relaxed, to_rationals(ints({2, 0, 1}))));
  CHECK_FALSE(satisfies(to_linear_system(sys, 0, true), to_rationals(ints({2, 0, 1}))));
}

TEST_CASE("fully absorbing Y gives one forest with an empty system") {
  const ReactionNetwork net = load("exchange");
  const DomCrn all{{}, {0, 1, 2, 3}, {}};
  const ForestEnumeration en = enumerate_forests(net, all);
  REQUIRE(en.forests.size() == 1);
  CHECK(en.forests[0].choices.empty());
  CHECK(en.forests[0].interior == std::vector<std::size_t>{0, 1, 2});
  const BalancingSystem sys = build_balancing_system(net, all, en.forests[0]);
  CHECK(sys.flows.empty());
  CHECK(sys.candidates.empty());
}

TEST_CASE("EnvZ forests") {
  const ReactionNetwork net = load("envz");
  const DomCrn dcrn = maximal_admissible(net);
  const ForestEnumeration en = enumerate_forests(net, dcrn);
  CHECK(en.forests.size() == 9);
  CHECK_FALSE(en.truncated);
  const ExteriorForest& first = en.forests[0];
  CHECK(names(net, first.edges()) ==
        std::vector<std::string>{"R1", "R3", "R5", "R6", "R8", "R10", "R13", "D1", "D2", "D3",
                                 "D4", "D5"});
  for (const ExteriorForest& f : en.forests) CHECK(forest_defect(net, dcrn, f).empty());

  const BalancingSystem sys = build_balancing_system(net, dcrn, first);
  const BalanceOutcome o = decide_balance(sys);
  CHECK_FALSE(is_balanced(o));
  CHECK(verify_balance_outcome(net, dcrn, first, o));
  // Support and kernel conditions alone already force alpha_R5 = 0.
  CHECK_FALSE(is_feasible(solve_feasibility(to_linear_system(sys, 4, false))));

  const ForestEnumeration capped = enumerate_forests(net, dcrn, 3);
  CHECK(capped.truncated);
  CHECK(capped.forests.size() == 3);
  CHECK_FALSE(enumerate_forests(net, dcrn, 9).truncated);
  CHECK_THROWS_AS(enumerate_forests(net, dcrn, 0), std::invalid_argument);
}

TEST_CASE("forest defects are reported") {
  Exchange ex;
  ExteriorForest f = ex.left;
  f.choices[1].label = 0;
  CHECK_FALSE(forest_defect(ex.net, ex.dcrn, f).empty());
  f = ex.left;
  f.choices.pop_back();
  CHECK_FALSE(forest_defect(ex.net, ex.dcrn, f).empty());
  f = ex.left;
  f.choices[1].label = 1;  // 2X2 -> X1+X2 closes a cycle with R1
  CHECK(forest_defect(ex.net, ex.dcrn, f).find("does not reach") != std::string::npos);
  f = ex.left;
  f.interior.push_back(2);
  CHECK_FALSE(forest_defect(ex.net, ex.dcrn, f).empty());
}

TEST_CASE("widening the candidate set never unbalances a forest") {
  for (const char* name : {"exchange", "envz", "example000", "example100", "example101", "competition"}) {
    const ReactionNetwork net = load(name);
    const DomCrn dcrn = maximal_admissible(net);
    for (const ExteriorForest& f : enumerate_forests(net, dcrn).forests) {
      const BalanceOutcome narrow =
          decide_balance(build_balancing_system(net, dcrn, f, NontrivialityReading::kTrueReactions));
      const BalanceOutcome wide = decide_balance(
          build_balancing_system(net, dcrn, f, NontrivialityReading::kIncludeDomination));
      if (is_balanced(narrow)) CHECK(is_balanced(wide));
      CHECK(verify_balance_outcome(net, dcrn, f, narrow, NontrivialityReading::kTrueReactions));
      CHECK(verify_balance_outcome(net, dcrn, f, wide, NontrivialityReading::kIncludeDomination));
    }
  }
}

TEST_CASE("balanced witnesses are integral and rescale") {
  Exchange ex;
  const BalanceOutcome lo = decide_balance(build_balancing_system(ex.net, ex.dcrn, ex.left));
  Balanced b = std::get<Balanced>(lo);
  for (auto& a : b.alpha) a *= 6;
  CHECK(verify_balance_outcome(ex.net, ex.dcrn, ex.left, b));
  CHECK(scale_to_integers(to_rationals(b.alpha)) == std::get<Balanced>(lo).alpha);
}
