#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "crnx/graph.hpp"
#include "crnx/parser.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CRNX_FIXTURE_DIR) + "/" + name + ".crn";
}

inline crnx::ReactionNetwork load(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return crnx::parse_crn(ss.str()).network;
}

inline crnx::ReactionNetwork net_from(const std::string& text) {
  return crnx::parse_crn(text).network;
}

inline std::size_t cx(const crnx::ReactionNetwork& net, const std::string& text) {
  return net.find_complex(crnx::parse_complex(net, text)).value();
}

inline crnx::ComplexSet cset(const crnx::ReactionNetwork& net, const std::string& list) {
  return crnx::parse_complex_list(net, list);
}

}  // namespace testing
