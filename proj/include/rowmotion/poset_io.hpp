#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "rowmotion/poset.hpp"

namespace rowmotion {

/// Reads the custom poset format: one cover per line as `lower < upper`
/// (chains `a < b < c` are accepted), `#` starts a comment, and a line with a
/// single bare token declares an isolated element. Elements are indexed in
/// order of first appearance. Throws ParseError (with line number),
/// CycleDetected or SizeLimitExceeded.
Poset read_poset(std::istream& in);
Poset parse_poset(std::string_view text);
Poset load_poset(const std::string& path);

/// Writes `p` back in the same format.
std::string format_poset(const Poset& p);

}  // namespace rowmotion
