#pragma once

#include <string>
#include <string_view>

#include "pancycle/graph.hpp"

namespace pancycle {

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws MalformedRecord or OrderTooLarge.
Graph parse_graph6(std::string_view line);

/// Canonical headerless graph6 text for g.
std::string write_graph6(const Graph& g);

}  // namespace pancycle
