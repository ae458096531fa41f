#include <doctest.h>

#include "crnx/crn_model.hpp"
#include "crnx/errors.hpp"
#include "fixtures.hpp"

using namespace crnx;
using testing::load;

namespace {
Complex c(std::vector<Count> v) { return Complex{std::move(v)}; }
}  // namespace

TEST_CASE("complexes are deduplicated in first-appearance order") {
  const ReactionNetwork net = build_network(
      {"X1", "X2"}, {{c({1, 1}), c({0, 2})}, {c({0, 2}), c({1, 1})}, {c({0, 1}), c({1, 0})}});
  REQUIRE(net.num_complexes() == 4);
  CHECK(net.complex_name(0) == "X1 + X2");
  CHECK(net.complex_name(1) == "2 X2");
  CHECK(net.complex_name(2) == "X2");
  CHECK(net.complex_name(3) == "X1");
  CHECK(net.reactions()[2].source == 2);
  CHECK(net.reactions()[2].target == 3);
}

TEST_CASE("empty and self-loop networks") {
  const ReactionNetwork empty = build_network({"A"}, {});
  CHECK(empty.num_complexes() == 0);
  CHECK(empty.num_reactions() == 0);
  const ReactionNetwork loop = build_network({"X1"}, {{c({1}), c({1})}});
  CHECK(loop.num_complexes() == 1);
  CHECK(stoich_matrix(loop)(0, 0) == 0);
}

TEST_CASE("build_network rejects malformed input") {
  CHECK_THROWS_AS(build_network({"A", "A"}, {}), InputError);
  CHECK_THROWS_AS(build_network({"A", "B"}, {{c({1}), c({0, 1})}}), InputError);
  CHECK_THROWS_AS(build_network({"A"}, {{c({-1}), c({0})}}), InputError);
}

TEST_CASE("stoichiometric matrices of the small examples") {
  CHECK(stoich_matrix(load("exchange")).to_rows() ==
        std::vector<std::vector<Count>>{{-1, 1, 1}, {1, -1, -1}});
  CHECK(stoich_matrix(load("crossfeed")).to_rows() ==
        std::vector<std::vector<Count>>{{-1, 2}, {2, -1}});
  CHECK(stoich_matrix(load("leaky")).to_rows() ==
        std::vector<std::vector<Count>>{{0, -1, 1}, {-1, 1, -1}});
  const StoichMatrix g = stoich_matrix(load("envz"));
  CHECK(g.rows() == 9);
  CHECK(g.cols() == 14);
  CHECK(g.transposed().transposed() == g);
}

TEST_CASE("charging") {
  CHECK_FALSE(is_charged(c({1, 1}), {0, 7}));
  CHECK(is_charged(c({0, 0}), {0, 0}));
  CHECK(is_charged(c({0, 2}), {0, 2}));
  CHECK_THROWS_AS(is_charged(c({1}), {1, 1}), InputError);
}

TEST_CASE("firing") {
  const ReactionNetwork comp = load("competition");
  CHECK(fire(comp, {2, 0}, 0) == State{1, 1});
  CHECK_FALSE(fire(comp, {0, 2}, 2).has_value());
  const ReactionNetwork exch = load("exchange");
  CHECK(fire(exch, {0, 1}, 2) == State{1, 0});
  CHECK_THROWS_AS(fire(exch, {0, 1}, 3), std::out_of_range);
}

TEST_CASE("fire succeeds exactly when charged and follows the stoichiometry") {
  for (const char* name : {"competition", "exchange", "leaky", "envz", "example100"}) {
    const ReactionNetwork net = load(name);
    const StoichMatrix g = stoich_matrix(net);
    const std::size_t m = net.num_species();
    for (Count seed = 0; seed < 40; ++seed) {
      State x(m);
      for (std::size_t i = 0; i < m; ++i) x[i] = (seed * 7 + static_cast<Count>(i) * 3) % 4;
      for (std::size_t k = 0; k < net.num_reactions(); ++k) {
        const auto y = fire(net, x, k);
        CHECK(y.has_value() == is_charged(net.source(k), x));
        if (y) {
          for (std::size_t i = 0; i < m; ++i) CHECK((*y)[i] == x[i] + g(i, k));
        }
      }
    }
  }
}

TEST_CASE("building twice gives identical indexing") {
  const ReactionNetwork a = load("envz");
  const ReactionNetwork b = load("envz");
  CHECK(a.complexes() == b.complexes());
  CHECK(stoich_matrix(a) == stoich_matrix(b));
}
