#ifndef NRWALK_GRAPH6_HPP
#define NRWALK_GRAPH6_HPP

#include <string>
#include <string_view>

#include "nrwalk/graph.hpp"

namespace nrw {

// graph6 encoding of simple undirected graphs: a vertex-count prefix
// followed by the upper triangle of the adjacency matrix in column order,
// packed six bits per printable character (offset 63). Supports the one-,
// four- and eight-character count prefixes; graphs are capped at 2^18
// vertices. An optional ">>graph6<<" header is accepted on decode.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

inline constexpr int kGraph6MaxVertices = 1 << 18;

}  // namespace nrw

#endif
