#ifndef NRWALK_GENERATORS_HPP
#define NRWALK_GENERATORS_HPP

#include <string_view>

#include "nrwalk/graph.hpp"

namespace nrw {

// Canonical labeled instances of the graph families used throughout the
// test corpus and the CLI.
Graph make_cycle(int n);                       // n >= 3
Graph make_complete(int n);                    // n >= 2
Graph make_complete_bipartite(int a, int b);   // a, b >= 1
Graph make_petersen();                         // outer 5-cycle + pentagram
Graph make_heawood();                          // LCF [5,-5]^7

// Parses "family" or "family:params" specs, e.g. "cycle:7", "petersen",
// "complete_bipartite:2,3". Throws PreconditionError for unknown families
// or out-of-range parameters.
Graph generate(std::string_view family_spec);

}  // namespace nrw

#endif
