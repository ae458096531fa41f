#pragma once

// Plain-text reaction format:
//   file     := line*
//   line     := reaction | "#" comment | blank
//   reaction := complex ("->" | "<->") complex
//   complex  := "0" | term ("+" term)*
//   term     := [positive integer] identifier
// "<->" adds the forward reaction, then the reverse one. Species are indexed
// by first appearance.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crnx/crn_model.hpp"

namespace crnx {

struct SourceLocation {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
};

struct CrnDocument {
  std::string text;
  ReactionNetwork network;
  std::vector<SourceLocation> reaction_locations;  // one per reaction
};

// Throws InputError with "line L, column C: ..." diagnostics.
CrnDocument parse_crn(std::string_view text);

// One "source -> target" line per reaction, in reaction order.
std::string print_crn(const ReactionNetwork& net);

// "2X1 + X2", "X1+X2" or "0" against the network's species; throws InputError
// for unknown species.
Complex parse_complex(const ReactionNetwork& net, std::string_view text);
// Comma-separated complexes that must occur in the network.
std::vector<std::size_t> parse_complex_list(const ReactionNetwork& net, std::string_view text);
// "X1=2,X2=0"; unnamed species default to 0.
State parse_state(const ReactionNetwork& net, std::string_view text);

}  // namespace crnx
