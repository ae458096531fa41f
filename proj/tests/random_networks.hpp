#pragma once

#include <cstdint>
#include <vector>

#include "crnx/crn_model.hpp"

namespace testing {

struct RandomNetworkShape {
  std::size_t max_species = 4;
  std::size_t max_reactions = 6;
  crnx::Count max_coeff = 2;
};

// Deterministic stream of random networks that pass the subconservativity
// test, `count` of them.
std::vector<crnx::ReactionNetwork> random_subconservative_networks(std::size_t count,
                                                                   std::uint64_t seed,
                                                                   RandomNetworkShape shape = {});

}  // namespace testing
