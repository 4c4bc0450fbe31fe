#pragma once

#include <string>
#include <string_view>

#include "kturan/graph.hpp"

namespace kturan {

/// graph6 text for g, without the optional `>>graph6<<` header.
std::string encode_graph6(const Graph& g);

/// Parses header-free graph6. Surrounding whitespace is ignored; anything
/// else that is not well-formed (bad byte, wrong length, non-zero padding)
/// throws std::invalid_argument.
Graph decode_graph6(std::string_view text);

}  // namespace kturan
