#include "tempo_btw/gadgets.hpp"

#include <algorithm>
#include <string>

#include "tempo_btw/errors.hpp"

namespace tempo_btw {
namespace {

TimeEdge edge(VertexId a, VertexId b, Time t) { return {std::min(a, b), std::max(a, b), t}; }

std::string fresh_label(const TemporalGraph& g, std::string base) {
  while (g.find(base)) base += "'";
  return base;
}

}  // namespace

MatchingGadget matching_gadget(const BipartiteGraph& b) {
  const auto na = static_cast<VertexId>(b.left);
  const auto nb = static_cast<VertexId>(b.right);
  const VertexId a_prime = 0;
  auto a = [](VertexId i) { return i; };  // i in 1..|A|
  auto bv = [na](VertexId j) { return na + j; };  // j in 1..|B|
  const VertexId b_prime = na + nb + 1;
  const Time lifetime = 2 * static_cast<Time>(na) + 1;

  std::vector<std::string> labels{"a'"};
  for (VertexId i = 1; i <= na; ++i) labels.push_back("a" + std::to_string(i));
  for (VertexId j = 1; j <= nb; ++j) labels.push_back("b" + std::to_string(j));
  labels.push_back("b'");

  std::vector<TimeEdge> edges;
  for (VertexId i = 1; i <= na; ++i) {
    const Time ti = 2 * static_cast<Time>(i);
    edges.push_back(edge(a_prime, a(i), ti - 1));
    if (i > 1) {
      for (VertexId j = 1; j <= nb; ++j) edges.push_back(edge(a(i), bv(j), ti - 1));
    }
  }
  for (const auto& [i, j] : b.edges) {
    if (i >= na || j >= nb) throw DomainError("bipartite edge out of range");
    edges.push_back(edge(a(i + 1), bv(j + 1), 2 * static_cast<Time>(i + 1)));
  }
  for (VertexId j = 1; j <= nb; ++j) edges.push_back(edge(bv(j), b_prime, lifetime));
  const std::size_t n = labels.size();
  return {TemporalGraph::build(n, std::move(edges), std::move(labels)), a_prime, b_prime};
}

BigInt count_matchings(const BipartiteGraph& b) {
  if (b.left + b.right > 16) throw DomainError("count_matchings supports at most 16 vertices");
  std::vector<std::vector<std::uint32_t>> adj(b.left);
  for (const auto& [i, j] : b.edges) {
    if (i >= b.left || j >= b.right) throw DomainError("bipartite edge out of range");
    adj[i].push_back(j);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  // ways[mask]: matchings of the left vertices seen so far using right set mask.
  std::vector<BigInt> ways(std::size_t{1} << b.right, BigInt(0));
  ways[0] = 1;
  for (const auto& row : adj) {
    std::vector<BigInt> next = ways;
    for (std::size_t mask = 0; mask < ways.size(); ++mask) {
      if (ways[mask] == 0) continue;
      for (const auto j : row) {
        if (!(mask >> j & 1)) next[mask | std::size_t{1} << j] += ways[mask];
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

BetweennessGadget betweenness_gadget(const TemporalGraph& g, VertexId a, VertexId b) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (a >= n || b >= n) throw DomainError("gadget endpoints must be vertices of the graph");
  const Time lifetime = g.lifetime();
  BetweennessGadget out;
  out.a_prime = n;
  out.b_prime = n + 1;
  out.v_prime = n + 2;

  std::vector<std::string> labels = g.labels();
  labels.push_back(fresh_label(g, "a'"));
  labels.push_back(fresh_label(g, "b'"));
  labels.push_back(fresh_label(g, "v'"));

  std::vector<TimeEdge> edges;
  for (const TimeEdge& e : g.edges()) edges.push_back({e.u, e.v, e.t + 1});
  edges.push_back(edge(out.a_prime, a, 1));
  edges.push_back(edge(out.a_prime, out.v_prime, 1));
  edges.push_back(edge(out.v_prime, out.b_prime, lifetime + 2));
  edges.push_back(edge(b, out.b_prime, lifetime + 2));
  const std::size_t count = labels.size();
  out.graph = TemporalGraph::build(count, std::move(edges), std::move(labels));
  return out;
}

Rational recover_path_count_four_pairs(const Rational& c) {
  if (c == 0) throw DomainError("betweenness of v' cannot be zero");
  return Rational(4) / c - 1;
}

Rational recover_path_count(const Rational& c, bool strict) {
  if (c == 0) throw DomainError("betweenness of v' cannot be zero");
  if (strict) return Rational(1) / c - 1;
  if (c == 4) return Rational(0);
  return Rational(2) / c - 1;
}

TemporalGraph three_paths_graph() {
  enum : VertexId { s, a, b1, b2, b3, c1, c2, z };
  std::vector<TimeEdge> edges{
      edge(s, a, 1),   edge(s, b1, 1),  edge(s, c1, 3),  edge(b1, b2, 2), edge(b2, b3, 3),
      edge(c1, c2, 4), edge(b3, z, 4), edge(c2, z, 5), edge(a, z, 5),
  };
  return TemporalGraph::build(8, std::move(edges), {"s", "a", "b1", "b2", "b3", "c1", "c2", "z"});
}

WalkArtifactGraph walk_artifact_graph(std::size_t left, std::size_t right, Time lifetime) {
  if (lifetime < 1) throw DomainError("lifetime must be positive");
  WalkArtifactGraph out;
  out.v1 = 0;
  out.v2 = 1;
  out.v3 = 2;
  std::vector<std::string> labels{"v1", "v2", "v3"};
  std::vector<TimeEdge> edges;
  for (std::size_t i = 0; i < left; ++i) {
    const auto x = static_cast<VertexId>(labels.size());
    labels.push_back("l" + std::to_string(i + 1));
    out.left.push_back(x);
    edges.push_back(edge(x, out.v1, 1));
    edges.push_back(edge(x, out.v2, 1));
  }
  for (std::size_t i = 0; i < right; ++i) {
    const auto y = static_cast<VertexId>(labels.size());
    labels.push_back("r" + std::to_string(i + 1));
    out.right.push_back(y);
    edges.push_back(edge(y, out.v1, lifetime));
    edges.push_back(edge(y, out.v2, lifetime));
  }
  for (Time t = 1; t <= lifetime; ++t) edges.push_back(edge(out.v2, out.v3, t));
  const std::size_t count = labels.size();
  out.graph = TemporalGraph::build(count, std::move(edges), std::move(labels));
  return out;
}

}  // namespace tempo_btw
