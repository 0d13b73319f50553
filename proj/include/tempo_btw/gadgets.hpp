#pragma once

// Small constructions with known path counts, used as cross-checks:
// the bipartite-matching gadget (strict a'-b' paths correspond to non-empty
// matchings), the betweenness gadget (betweenness of an added vertex v'
// encodes the number of a-b paths), and two fixed sample graphs.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tempo_btw/graph.hpp"
#include "tempo_btw/number.hpp"

namespace tempo_btw {

/// Simple bipartite graph; edges are (left index, right index).
struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct MatchingGadget {
  TemporalGraph graph;
  VertexId source = 0;  ///< a'
  VertexId target = 0;  ///< b'
};

/// Vertices a', a_1..a_|A|, b_1..b_|B|, b' with lifetime T = 2|A| + 1:
/// a'-a_i at 2i-1, a_i-b_j at 2i for every edge, a_i-b_j at 2i-1 for i > 1
/// and every j, b_j-b' at T.
MatchingGadget matching_gadget(const BipartiteGraph& b);

/// Number of matchings of any size, the empty matching included. Throws
/// DomainError if |A| + |B| > 16 or an edge is out of range.
BigInt count_matchings(const BipartiteGraph& b);

struct BetweennessGadget {
  TemporalGraph graph;
  VertexId a_prime = 0;
  VertexId b_prime = 0;
  VertexId v_prime = 0;
};

/// Copies g with every label shifted by one and adds a', b', v' with the time
/// edges a'-a@1, a'-v'@1, v'-b'@(T+2), b-b'@(T+2).
BetweennessGadget betweenness_gadget(const TemporalGraph& g, VertexId a, VertexId b);

/// 4 / c - 1. Equals the number of a-b paths only when v' lies on optimal
/// paths of exactly four vertex pairs, each with p + 1 of them.
Rational recover_path_count_four_pairs(const Rational& foremost_betweenness_of_v);

/// Number of a-b temporal paths recovered from the foremost betweenness c of
/// v'. Strict: only the pair (a', b') routes through v', so p = 1/c - 1.
/// Non-strict: the pairs (a, b') and (a', b') always do, and (a, b), (a', b)
/// only when no a-b path exists, so p = 0 if c = 4 and p = 2/c - 1 otherwise.
Rational recover_path_count(const Rational& foremost_betweenness_of_v, bool strict);

/// s reaches z by three strict paths: s-a@1, a-z@5 (fewest hops);
/// s-b1@1, b1-b2@2, b2-b3@3, b3-z@4 (earliest arrival);
/// s-c1@3, c1-c2@4, c2-z@5 (shortest duration).
TemporalGraph three_paths_graph();

/// Hubs v1, v2 joined to `left` vertices at label 1 and to `right` vertices at
/// label T, plus a pendant v3 joined to v2 at every label 1..T. Foremost
/// paths avoid v3 while foremost walks may bounce through it.
struct WalkArtifactGraph {
  TemporalGraph graph;
  VertexId v1 = 0;
  VertexId v2 = 0;
  VertexId v3 = 0;
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};
WalkArtifactGraph walk_artifact_graph(std::size_t left, std::size_t right, Time lifetime);

}  // namespace tempo_btw
