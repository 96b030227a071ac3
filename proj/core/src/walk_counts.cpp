#include "nrwalk/walk_counts.hpp"

#include <sstream>

#include "nrwalk/errors.hpp"

namespace nrw {

WalkCountTable count_table(const ArcSpace& arcs, int horizon) {
  if (horizon < 0) throw PreconditionError("horizon must be >= 0");
  const int na = arcs.num_arcs();
  const int nv = arcs.num_vertices();
  WalkCountTable t;
  t.horizon = horizon;
  t.per_arc.assign(static_cast<std::size_t>(na),
                   std::vector<BigInt>(static_cast<std::size_t>(horizon + 1)));
  t.per_vertex.assign(
      static_cast<std::size_t>(nv),
      std::vector<BigInt>(static_cast<std::size_t>(horizon + 1)));
  for (int a = 0; a < na; ++a) t.per_arc[a][0] = 1;
  for (int v = 0; v < nv; ++v) t.per_vertex[v][0] = 1;
  for (int i = 1; i <= horizon; ++i) {
    for (int a = 0; a < na; ++a) {
      BigInt sum = 0;
      for (int b : arcs.successors(a)) sum += t.per_arc[b][i - 1];
      t.per_arc[a][i] = std::move(sum);
    }
    for (int v = 0; v < nv; ++v) {
      BigInt sum = 0;
      for (int a : arcs.out_arcs(v)) sum += t.per_arc[a][i - 1];
      t.per_vertex[v][i] = std::move(sum);
    }
  }
  return t;
}

BigInt count_from_vertex(const ArcSpace& arcs, int v, int i) {
  if (v < 0 || v >= arcs.num_vertices())
    throw PreconditionError("invalid vertex id");
  if (i < 0) throw PreconditionError("walk length must be >= 0");
  return count_table(arcs, i).per_vertex[v][i];
}

BigInt count_from_arc(const ArcSpace& arcs, int a, int i) {
  if (a < 0 || a >= arcs.num_arcs())
    throw PreconditionError("invalid arc id");
  if (i < 0) throw PreconditionError("walk length must be >= 0");
  return count_table(arcs, i).per_arc[a][i];
}

namespace {

void check_start(const ArcSpace& arcs, WalkStart start) {
  if (start.kind == WalkStart::Kind::kVertex) {
    if (start.id < 0 || start.id >= arcs.num_vertices())
      throw PreconditionError("invalid vertex id");
  } else if (start.id < 0 || start.id >= arcs.num_arcs()) {
    throw PreconditionError("invalid arc id");
  }
}

void check_guard(const ArcSpace& arcs, WalkStart start, int i,
                 bool cumulative) {
  if (i > kMaxEnumerationLength) {
    std::ostringstream os;
    os << "enumeration length " << i << " exceeds limit "
       << kMaxEnumerationLength;
    throw EnumerationLimitError(os.str());
  }
  const auto table = count_table(arcs, i);
  BigInt predicted = 0;
  for (int j = cumulative ? 0 : i; j <= i; ++j)
    predicted += start.kind == WalkStart::Kind::kVertex
                     ? table.per_vertex[start.id][j]
                     : table.per_arc[start.id][j];
  if (predicted > kMaxEnumerationWalks) {
    std::ostringstream os;
    os << "predicted walk count " << predicted << " exceeds limit "
       << kMaxEnumerationWalks;
    throw EnumerationLimitError(os.str());
  }
}

// Depth-first extension of a non-empty walk by up to `remaining` arcs;
// visit fires for the walk as given and for every proper extension, so each
// walk of every intermediate length is seen exactly once.
template <typename Visit>
void extend(const ArcSpace& arcs, std::vector<int>& walk, int remaining,
            Visit&& visit) {
  visit(walk);
  if (remaining == 0) return;
  for (int b : arcs.successors(walk.back())) {
    walk.push_back(b);
    extend(arcs, walk, remaining - 1, visit);
    walk.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> brute_force_walks(const ArcSpace& arcs,
                                                WalkStart start, int i) {
  check_start(arcs, start);
  if (i < 0) throw PreconditionError("walk length must be >= 0");
  check_guard(arcs, start, i, /*cumulative=*/false);

  // Vertex starts yield walks of i arcs; arc starts include the start arc,
  // so the full walks have i+1 arcs.
  const std::size_t want =
      static_cast<std::size_t>(start.kind == WalkStart::Kind::kVertex ? i
                                                                      : i + 1);
  std::vector<std::vector<int>> walks;
  auto collect = [&](const std::vector<int>& w) {
    if (w.size() == want) walks.push_back(w);
  };
  std::vector<int> walk;
  if (start.kind == WalkStart::Kind::kVertex) {
    if (i == 0) return {{}};  // the single empty walk
    for (int a : arcs.out_arcs(start.id)) {
      walk.assign(1, a);
      extend(arcs, walk, i - 1, collect);
    }
  } else {
    walk.assign(1, start.id);
    extend(arcs, walk, i, collect);
  }
  return walks;
}

void EndpointMultiset::merge(const EndpointMultiset& other) {
  for (auto [v, c] : other.counts) counts[v] += c;
  distinct = true;
  for (const auto& entry : counts) {
    if (entry.second != 1) {
      distinct = false;
      break;
    }
  }
}

EndpointMultiset endpoint_multiset(const ArcSpace& arcs, WalkStart start,
                                   int radius) {
  check_start(arcs, start);
  if (radius < 0) throw PreconditionError("radius must be >= 0");
  check_guard(arcs, start, radius, /*cumulative=*/true);

  EndpointMultiset ms;
  auto record = [&](const std::vector<int>& w) { ++ms.counts[arcs.head(w.back())]; };
  std::vector<int> walk;
  if (start.kind == WalkStart::Kind::kVertex) {
    ++ms.counts[start.id];  // the empty walk ends where it starts
    if (radius >= 1) {
      for (int a : arcs.out_arcs(start.id)) {
        walk.assign(1, a);
        extend(arcs, walk, radius - 1, record);
      }
    }
  } else {
    walk.assign(1, start.id);
    extend(arcs, walk, radius, record);
  }
  for (const auto& entry : ms.counts) {
    if (entry.second != 1) {
      ms.distinct = false;
      break;
    }
  }
  return ms;
}

}  // namespace nrw
