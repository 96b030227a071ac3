#include "nrwalk/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "nrwalk/errors.hpp"

namespace nrw {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream os;
      os << "edge (" << u << "," << v << ") out of range for n=" << n;
      throw PreconditionError(os.str());
    }
    if (u == v) {
      std::ostringstream os;
      os << "loop at vertex " << u << " not allowed";
      throw PreconditionError(os.str());
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  int m = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw PreconditionError("parallel edge not allowed");
    m += static_cast<int>(nbrs.size());
  }
  g.num_edges_ = m / 2;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= num_vertices() || v < 0 || v >= num_vertices())
    return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw PreconditionError("degree stats of empty graph");
  DegreeStats s;
  s.min_degree = std::numeric_limits<int>::max();
  s.max_degree = 0;
  for (int v = 0; v < n; ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  s.average_degree = Rational(2 * g.num_edges(), n);
  return s;
}

// Shortest cycle through BFS from every vertex. A non-tree edge (u,w) seen
// from root s closes a cycle of length dist[u]+dist[w]+1; taking the minimum
// over all roots and all such edges yields the girth. Once dist[u] already
// reaches half the best cycle found, longer candidates cannot improve it, so
// the scan from s stops early.
std::optional<int> girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u] && dist[w] >= dist[u]) {
          // Non-tree edge; both endpoints already reached from s.
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int component_count(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int components = 0;
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) {
  return g.num_vertices() <= 1 || component_count(g) == 1;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  int declared_n = -1;
  int max_vertex = -1;
  int line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream fields(line);
    std::string a;
    if (!(fields >> a)) continue;  // blank or comment-only
    if (first_content_line && a == "n") {
      first_content_line = false;
      if (!(fields >> declared_n) || declared_n < 0) {
        std::ostringstream os;
        os << "line " << line_no << ": bad vertex count header";
        throw ParseError(os.str());
      }
      std::string rest;
      if (fields >> rest) {
        std::ostringstream os;
        os << "line " << line_no << ": trailing data after vertex count";
        throw ParseError(os.str());
      }
      continue;
    }
    first_content_line = false;
    int u, v;
    std::string rest;
    std::istringstream pair_in(line);
    if (!(pair_in >> u >> v) || (pair_in >> rest)) {
      std::ostringstream os;
      os << "line " << line_no << ": expected \"u v\"";
      throw ParseError(os.str());
    }
    if (u < 0 || v < 0) {
      std::ostringstream os;
      os << "line " << line_no << ": negative vertex id";
      throw ParseError(os.str());
    }
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  int n = declared_n >= 0 ? declared_n : max_vertex + 1;
  if (max_vertex >= n) {
    std::ostringstream os;
    os << "vertex id " << max_vertex << " exceeds declared count " << n;
    throw ParseError(os.str());
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

}  // namespace nrw
