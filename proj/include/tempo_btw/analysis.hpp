#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tempo_btw/graph.hpp"

namespace tempo_btw {

/// Vertices ordered by non-increasing score, ties by label ascending.
struct Ranking {
  std::vector<VertexId> order;
  std::vector<double> scores;       ///< indexed by vertex
  std::vector<std::string> labels;  ///< indexed by vertex

  static Ranking from_scores(std::vector<double> scores, std::vector<std::string> labels);
  std::size_t size() const noexcept { return order.size(); }
};

struct TauOptions {
  /// Restrict to vertices with a nonzero score in both rankings.
  bool nonzero_only = false;
  /// Scores within this relative distance count as tied.
  double tie_tolerance = 1e-12;
};

struct TauResult {
  double tau = 0.0;  ///< NaN when fewer than two vertices take part
  std::size_t concordant = 0;
  std::size_t discordant = 0;
  std::size_t tied = 0;   ///< pairs tied in either score vector
  std::size_t pairs = 0;  ///< n(n-1)/2 over the participating vertices
  double tie_fraction() const noexcept { return pairs ? static_cast<double>(tied) / pairs : 0.0; }
};

/// Tau-a: (concordant - discordant) / pairs, tied pairs counted as neither.
/// Throws DomainError if the rankings are over different vertex sets.
TauResult kendall_tau(const Ranking& a, const Ranking& b, const TauOptions& options = {});

/// Size of the intersection of the first k vertices of both rankings. Throws
/// DomainError if k exceeds the number of vertices or the vertex sets differ.
std::size_t top_k_intersection(const Ranking& a, const Ranking& b, std::size_t k);

/// Counts per bucket of width max/buckets over [0, max]; the last bucket is
/// closed at max. An all-zero vector lands entirely in bucket 0. Throws
/// DomainError for zero buckets or negative scores.
std::vector<std::size_t> histogram(const std::vector<double>& scores, std::size_t buckets);

}  // namespace tempo_btw
