#pragma once

#include <string>
#include <string_view>

#include "tsaudit/type_space.hpp"

namespace tsaudit {

// The .tsjson format:
//
//   {
//     "states": ["w1", "w2", ...],
//     "players": [
//       {"name": "1",
//        "partition": [["w1", "w2"], ["w3"]],
//        "beliefs": {"w1": ["1/2", "1/2", "0"], "w3": ["0", "0", "1"]}}
//     ]
//   }
//
// Belief rows are keyed by state label. A state without its own key takes the
// row listed for another state of its cell; listing differing rows for two
// states of one cell is accepted here and reported by validate() as a
// measurability violation. Probabilities must be strings ("p/q" or "p").

struct ParseOptions {
  /// Refuse spaces with more states than this.
  std::size_t max_states = kMaxStatesDefault;
};

/// Throws ParseError with line/column for malformed JSON and with a JSON
/// pointer in the message for malformed content.
TypeSpace parse_type_space(std::string_view text, const ParseOptions& options = {});

/// Canonical text: one row per cell keyed by the cell's first state, plus an
/// extra key for any state whose row differs from its cell's first row.
std::string serialize_type_space(const TypeSpace& ts);

/// Whole file contents; throws IoError.
std::string read_file(const std::string& path);

}  // namespace tsaudit
