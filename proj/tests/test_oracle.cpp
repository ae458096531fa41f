#include <doctest.h>

#include <algorithm>
#include <set>

#include "crnx/errors.hpp"
#include "crnx/linear.hpp"
#include "crnx/oracle.hpp"
#include "fixtures.hpp"

using namespace crnx;
using testing::cset;
using testing::cx;
using testing::load;

namespace {
std::set<State> state_set(const StateGraph& g) { return {g.states.begin(), g.states.end()}; }

std::vector<std::vector<bool>> reachability(const StateGraph& g) {
  const std::size_t n = g.states.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    r[s][s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const StateEdge& e : g.successors[u]) {
        if (!r[s][e.to]) {
          r[s][e.to] = true;
          stack.push_back(e.to);
        }
      }
    }
  }
  return r;
}
}  // namespace

TEST_CASE("exploration of small state spaces") {
  const ReactionNetwork comp = load("competition");
  CHECK(state_set(explore(comp, {2, 0})) == std::set<State>{{2, 0}, {1, 1}, {0, 2}});
  const ReactionNetwork e21 = load("exchange");
  CHECK(state_set(explore(e21, {1, 1})) == std::set<State>{{1, 1}, {2, 0}, {0, 2}});
  const StateGraph zero = explore(e21, {0, 0});
  CHECK(zero.states.size() == 1);
  CHECK(recurrent_states(zero) == std::vector<bool>{true});
  CHECK_THROWS_AS(explore(e21, {1}), InputError);
}

TEST_CASE("cap exceeded on unbounded growth") {
  const ReactionNetwork grow = testing::net_from("X -> 2 X\n");
  CHECK_THROWS_AS(explore(grow, {1}, 50), CapExceeded);
}

TEST_CASE("recurrent states of the introductory network") {
  const ReactionNetwork comp = load("competition");
  const StateGraph g = explore(comp, {1, 1});
  const std::vector<bool> rec = recurrent_states(g);
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    CHECK(rec[s] == (g.states[s] == State{0, 2}));
  }
}

TEST_CASE("leaky complex recurrence") {
  const ReactionNetwork net = load("leaky");
  const StateGraph g = explore(net, {1, 1});
  const std::vector<bool> rec = recurrent_states(g);
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    if (rec[s]) CHECK(g.states[s][0] + g.states[s][1] == 1);
  }
  CHECK(complex_recurrent(g, net.complexes()[cx(net, "X1")]));
  CHECK(complex_recurrent(g, net.complexes()[cx(net, "X2")]));
  CHECK_FALSE(complex_recurrent(g, net.complexes()[cx(net, "X1+X2")]));
  CHECK(complex_recurrent(g, Complex{{0, 0}}));
  CHECK(extinction_on(net, g, cset(net, "X1+X2")));
}

TEST_CASE("extinction on fixtures from single roots") {
  const ReactionNetwork comp = load("competition");
  for (const State& x : states_with_total_at_most(2, 5)) {
    CHECK(extinction_on(comp, explore(comp, x), cset(comp, "2X1,X1+X2")));
  }
  const ReactionNetwork e101 = load("example101");
  const StateGraph g = explore(e101, parse_state(e101, "X1=1,X4=1,X5=1"));
  CHECK_FALSE(extinction_on(e101, g, cset(e101, "X1,X2+X4,X3+X5,X1+X5")));
}

TEST_CASE("budgeted sweeps") {
  const ReactionNetwork e999 = load("example999");
  CHECK(guaranteed_extinction_on(e999, cset(e999, "X1+X2,2X1"), 6).holds);

  const ReactionNetwork e101 = load("example101");
  const ExtinctionSweep s101 = guaranteed_extinction_on(e101, cset(e101, "X1,X2+X4"), 6);
  CHECK_FALSE(s101.holds);
  REQUIRE(s101.counterexample_root.has_value());
  const StateGraph g = explore(e101, *s101.counterexample_root);
  CHECK(complex_recurrent(g, e101.complexes()[*s101.recurrent_complex]));
  CHECK(is_charged(e101.complexes()[*s101.recurrent_complex], *s101.recurrent_witness));

  const ReactionNetwork e100 = load("example100");
  CHECK(guaranteed_extinction_on(e100, cset(e100, "X3+X4,X1+X4"), 6).holds);
  const ExtinctionSweep lit = guaranteed_extinction_on(e100, cset(e100, "X1,X2+X3"), 6);
  CHECK_FALSE(lit.holds);
  CHECK(*lit.counterexample_root == State{0, 1, 1, 0});
}

TEST_CASE("state enumeration by total") {
  const auto s = states_with_total_at_most(2, 2);
  CHECK(s == std::vector<State>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}});
  CHECK(states_with_total_at_most(3, 4).size() == 35);
  CHECK(states_with_total_at_most(0, 3) == std::vector<State>{State{}});
}

TEST_CASE("traces replay the stoichiometry") {
  const ReactionNetwork net = load("envz");
  const StateGraph g = explore(net, {1, 0, 0, 0, 2, 0, 0, 0, 0});
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    const Trace t = path_to(net, g, s);
    CHECK(t.end == g.states[s]);
    CHECK(trace_consistent(net, t));
    for (std::size_t k : t.sequence) CHECK(k < net.num_reactions());
  }
  Trace bad = path_to(net, g, g.states.size() - 1);
  if (!bad.sequence.empty()) {
    bad.counts[bad.sequence[0]] += 1;
    CHECK_FALSE(trace_consistent(net, bad));
  }
  CHECK_THROWS_AS(make_trace(net, g.states[0], {4}), std::invalid_argument);
}

TEST_CASE("conserved quantity is nonincreasing along every edge") {
  for (const char* name : {"leaky", "envz", "example100", "example999"}) {
    const ReactionNetwork net = load(name);
    const auto sub = is_subconservative(stoich_matrix(net));
    const auto c = scale_to_integers(std::get<Feasible>(sub).point);
    const bool conservative = is_feasible(is_conservative(stoich_matrix(net)));
    for (const State& x : states_with_total_at_most(net.num_species(), 3)) {
      const StateGraph g = explore(net, x);
      auto value = [&](const State& s) {
        Integer v = 0;
        for (std::size_t i = 0; i < s.size(); ++i) v += c[i] * static_cast<long>(s[i]);
        return v;
      };
      for (std::size_t s = 0; s < g.states.size(); ++s) {
        for (const StateEdge& e : g.successors[s]) {
          CHECK(value(g.states[e.to]) <= value(g.states[s]));
          if (conservative) CHECK(value(g.states[e.to]) == value(g.states[s]));
        }
      }
    }
  }
}

TEST_CASE("recurrence labels agree with pairwise reachability") {
  for (const char* name : {"competition", "exchange", "leaky", "example100", "example101", "example000"}) {
    const ReactionNetwork net = load(name);
    for (const State& x : states_with_total_at_most(net.num_species(), 3)) {
      const StateGraph g = explore(net, x);
      if (g.states.size() > 200) continue;
      const auto r = reachability(g);
      const auto rec = recurrent_states(g);
      for (std::size_t s = 0; s < g.states.size(); ++s) {
        bool definitional = true;
        for (std::size_t t = 0; t < g.states.size(); ++t)
          if (r[s][t] && !r[t][s]) definitional = false;
        CHECK(rec[s] == definitional);
      }
    }
  }
}

TEST_CASE("SLC recurrence report") {
  const ReactionNetwork net = load("leaky");
  const SlcRecurrenceReport rep = slc_recurrence_report(net, explore(net, {1, 1}));
  CHECK(rep.ok());
  CHECK(rep.complex_recurrent[cx(net, "X1")]);
  CHECK(rep.complex_recurrent[cx(net, "X2")]);
  CHECK_FALSE(rep.complex_recurrent[cx(net, "X1+X2")]);

  const ReactionNetwork envz = load("envz");
  const SlcRecurrenceReport er = slc_recurrence_report(envz, explore(envz, {1, 1, 0, 0, 1, 0, 0, 0, 0}));
  CHECK(er.ok());
  for (std::size_t v = 0; v < envz.num_complexes(); ++v) {
    CHECK(er.complex_recurrent[v] == (v == cx(envz, "X4")));
  }

  const ReactionNetwork cyc = testing::net_from("A -> B\nB -> A\n");
  const SlcRecurrenceReport cr = slc_recurrence_report(cyc, explore(cyc, {1, 0}));
  CHECK(cr.ok());
  CHECK(cr.slc_recurrent == std::vector<bool>{true});
}

TEST_CASE("parallel and serial sweeps agree") {
  const ReactionNetwork net = load("example100");
  const ComplexSet yc = cset(net, "X1,X2+X3");
  const ExtinctionSweep a = guaranteed_extinction_on(net, yc, 5, kDefaultStateCap, Execution::kSerial);
  const ExtinctionSweep b = guaranteed_extinction_on(net, yc, 5, kDefaultStateCap, Execution::kParallel);
  CHECK(a.holds == b.holds);
  CHECK(a.counterexample_root == b.counterexample_root);
  CHECK(a.recurrent_complex == b.recurrent_complex);
  CHECK(a.roots_checked == b.roots_checked);
}
