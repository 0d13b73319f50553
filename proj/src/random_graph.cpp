#include "tempo_btw/random_graph.hpp"

#include <algorithm>
#include <set>

#include "tempo_btw/errors.hpp"

namespace tempo_btw {

TemporalGraph random_temporal_graph(std::size_t n, Time T, double density, Rng& rng) {
  std::vector<TimeEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      for (Time t = 1; t <= T; ++t) {
        if (rng.bernoulli(density)) edges.push_back({u, v, t});
      }
    }
  }
  return TemporalGraph::build(n, std::move(edges));
}

TemporalGraph random_temporal_graph_edges(std::size_t n, Time T, std::size_t m, Rng& rng) {
  const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t slots = pairs * static_cast<std::uint64_t>(std::max<Time>(T, 0));
  if (m > slots) throw DomainError("requested more time edges than the graph can hold");
  std::vector<TimeEdge> edges;
  edges.reserve(m);
  std::set<TimeEdge> seen;
  while (edges.size() < m) {
    VertexId u = static_cast<VertexId>(rng.between(0, static_cast<std::int64_t>(n) - 1));
    VertexId v = static_cast<VertexId>(rng.between(0, static_cast<std::int64_t>(n) - 2));
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    const TimeEdge e{u, v, static_cast<Time>(rng.between(1, T))};
    if (seen.insert(e).second) edges.push_back(e);
  }
  return TemporalGraph::build(n, std::move(edges));
}

}  // namespace tempo_btw
