#ifndef NRWALK_ERRORS_HPP
#define NRWALK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace nrw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or binary graph input; the message carries the position.
struct ParseError : Error {
  using Error::Error;
};

// A theorem or process precondition does not hold for the given input.
struct PreconditionError : Error {
  using Error::Error;
};

// Enumeration refused because the walk family is too large to materialize.
struct EnumerationLimitError : Error {
  using Error::Error;
};

// Thrown by bipartition() on non-bipartite input. `cycle` lists the vertices
// of a witness odd cycle in order; the closing edge back to cycle.front() is
// implicit.
struct OddCycleError : Error {
  std::vector<int> cycle;
  explicit OddCycleError(std::vector<int> witness);
};

}  // namespace nrw

#endif
