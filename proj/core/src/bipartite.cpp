#include "nrwalk/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "nrwalk/errors.hpp"

namespace nrw {

OddCycleError::OddCycleError(std::vector<int> witness)
    : Error("graph is not bipartite"), cycle(std::move(witness)) {}

Bipartition bipartition(const Graph& g) {
  const int n = g.num_vertices();
  Bipartition bp;
  bp.side.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (bp.side[s] != -1) continue;
    bp.side[s] = 0;  // smallest id of the component starts on the left
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (bp.side[w] == -1) {
          bp.side[w] = 1 - bp.side[u];
          parent[w] = u;
          q.push(w);
        } else if (bp.side[w] == bp.side[u]) {
          // Odd cycle: walk both endpoints up to their lowest common
          // ancestor in the BFS tree, then join the two paths.
          std::vector<int> up_u{u}, up_w{w};
          int a = u, b = w;
          auto depth = [&](int v) {
            int d = 0;
            for (int x = v; parent[x] != -1; x = parent[x]) ++d;
            return d;
          };
          int da = depth(a), db = depth(b);
          while (da > db) {
            a = parent[a];
            up_u.push_back(a);
            --da;
          }
          while (db > da) {
            b = parent[b];
            up_w.push_back(b);
            --db;
          }
          while (a != b) {
            a = parent[a];
            b = parent[b];
            up_u.push_back(a);
            up_w.push_back(b);
          }
          // up_u ends at the LCA; up_w's copy of it is dropped.
          std::vector<int> cycle(up_u.begin(), up_u.end());
          for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it)
            cycle.push_back(*it);
          throw OddCycleError(std::move(cycle));
        }
      }
    }
  }
  for (int v = 0; v < n; ++v)
    (bp.side[v] == 0 ? bp.left : bp.right).push_back(v);
  return bp;
}

bool is_bipartite(const Graph& g) {
  try {
    bipartition(g);
    return true;
  } catch (const OddCycleError&) {
    return false;
  }
}

SideDegrees side_degrees(const Graph& g, const Bipartition& bp) {
  if (bp.left.empty() || bp.right.empty())
    throw PreconditionError("side degrees need both classes non-empty");
  SideDegrees sd;
  sd.min_left = sd.min_right = std::numeric_limits<int>::max();
  for (int v : bp.left) {
    sd.min_left = std::min(sd.min_left, g.degree(v));
    sd.max_left = std::max(sd.max_left, g.degree(v));
  }
  for (int v : bp.right) {
    sd.min_right = std::min(sd.min_right, g.degree(v));
    sd.max_right = std::max(sd.max_right, g.degree(v));
  }
  return sd;
}

bool is_biregular(const Graph& g, const Bipartition& bp, int dl, int dr) {
  for (int v : bp.left)
    if (g.degree(v) != dl) return false;
  for (int v : bp.right)
    if (g.degree(v) != dr) return false;
  return true;
}

}  // namespace nrw
