#include "nrwalk/generators.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "nrwalk/errors.hpp"

namespace nrw {

Graph make_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
  if (n < 2) throw PreconditionError("complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw PreconditionError("complete bipartite graph needs a, b >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spoke
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph make_heawood() {
  // LCF notation [5,-5]^7: a 14-cycle plus a chord i -- i+5 at each even i
  // (the odd-position chords i -- i-5 are the same edges seen from the
  // other end).
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return Graph::from_edges(14, edges);
}

namespace {

std::vector<int> parse_params(std::string_view text,
                              std::string_view family) {
  std::vector<int> params;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? comma
                                                         : comma - pos);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      std::ostringstream os;
      os << "bad parameter \"" << std::string(token) << "\" for family "
         << family;
      throw PreconditionError(os.str());
    }
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return params;
}

}  // namespace

Graph generate(std::string_view family_spec) {
  std::string_view family = family_spec;
  std::vector<int> params;
  if (auto colon = family_spec.find(':'); colon != std::string_view::npos) {
    family = family_spec.substr(0, colon);
    params = parse_params(family_spec.substr(colon + 1), family);
  }
  auto arity = [&](std::size_t k) {
    if (params.size() != k) {
      std::ostringstream os;
      os << "family " << std::string(family) << " takes " << k
         << " parameter(s), got " << params.size();
      throw PreconditionError(os.str());
    }
  };
  if (family == "cycle") {
    arity(1);
    return make_cycle(params[0]);
  }
  if (family == "complete") {
    arity(1);
    return make_complete(params[0]);
  }
  if (family == "complete_bipartite") {
    arity(2);
    return make_complete_bipartite(params[0], params[1]);
  }
  if (family == "petersen") {
    arity(0);
    return make_petersen();
  }
  if (family == "heawood") {
    arity(0);
    return make_heawood();
  }
  std::ostringstream os;
  os << "unknown graph family \"" << std::string(family) << "\"";
  throw PreconditionError(os.str());
}

}  // namespace nrw
