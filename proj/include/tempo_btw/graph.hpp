#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tempo_btw {

using VertexId = std::uint32_t;
/// Time label. Labels of time edges are in 1..T; 0 is reserved for the dummy
/// source appearance and -1 marks "unreachable" in per-source tables.
using Time = std::int32_t;

/// Undirected time edge ({u,v}, t), stored with u < v.
struct TimeEdge {
  VertexId u = 0;
  VertexId v = 0;
  Time t = 0;

  auto operator<=>(const TimeEdge&) const = default;
};

/// Directed traversal of a time edge.
struct Transition {
  VertexId from = 0;
  VertexId to = 0;
  Time t = 0;

  auto operator<=>(const Transition&) const = default;
};

/// A vertex at a time step. (s, 0) is the dummy appearance every path from s
/// starts in.
struct VertexAppearance {
  VertexId v = 0;
  Time t = 0;

  auto operator<=>(const VertexAppearance&) const = default;
};

/// Entry of a temporal neighborhood: the other endpoint and the label.
struct Neighbor {
  VertexId u = 0;
  Time t = 0;

  auto operator<=>(const Neighbor&) const = default;
};

/// Undirected temporal graph (V, E, T). Immutable once built; the builder
/// canonicalizes endpoint order, drops self-loops and collapses duplicate
/// time edges.
class TemporalGraph {
 public:
  struct BuildReport {
    std::size_t duplicates_removed = 0;
    std::size_t self_loops_dropped = 0;
  };

  TemporalGraph() = default;

  /// Builds a graph on vertices 0..n-1. Labels must be >= 1. `labels` (if
  /// non-empty) must have n entries; otherwise labels default to the decimal
  /// vertex ids. `raw_times`, if given, maps label t to raw_times[t - 1] and
  /// must cover every label used.
  static TemporalGraph build(std::size_t n, std::vector<TimeEdge> edges,
                             std::vector<std::string> labels = {},
                             std::vector<std::int64_t> raw_times = {},
                             BuildReport* report = nullptr);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  /// Lifetime: the largest label present, 0 for an edgeless graph.
  Time lifetime() const noexcept { return lifetime_; }

  /// Time edges sorted by (t, u, v).
  std::span<const TimeEdge> edges() const noexcept { return edges_; }

  /// Temporal neighborhood N(v) sorted by (t, u). Throws DomainError for an
  /// unknown vertex.
  std::span<const Neighbor> neighborhood(VertexId v) const;

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(const std::string& label) const;

  bool has_raw_times() const noexcept { return !raw_times_.empty(); }
  const std::vector<std::int64_t>& raw_times() const noexcept { return raw_times_; }
  /// Raw timestamp of label t, or t itself if the graph was not normalized.
  std::int64_t raw_time(Time t) const;

  bool has_edge(VertexId a, VertexId b, Time t) const;

 private:
  std::vector<TimeEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::string> labels_;
  std::vector<std::int64_t> raw_times_;
  Time lifetime_ = 0;
};

/// A sequence of transitions. Validity with respect to a graph is checked by
/// is_temporal_path / is_temporal_walk.
struct TemporalPath {
  std::vector<Transition> transitions;

  std::size_t length() const noexcept { return transitions.size(); }
  bool empty() const noexcept { return transitions.empty(); }
  /// Arrival label of the last transition (0 for the empty path).
  Time arrival() const noexcept { return transitions.empty() ? 0 : transitions.back().t; }
  /// Departure label of the first transition (0 for the empty path).
  Time departure() const noexcept { return transitions.empty() ? 0 : transitions.front().t; }

  auto operator<=>(const TemporalPath&) const = default;
};

bool is_temporal_walk(const TemporalGraph& g, const TemporalPath& p, bool strict);
/// Walk where no vertex is the start of two transitions nor the end of two.
bool is_temporal_path(const TemporalGraph& g, const TemporalPath& p, bool strict);

/// Boolean reachability between ordered vertex pairs via (strict / non-strict)
/// temporal paths. The diagonal is always set.
class ConnectivityMatrix {
 public:
  ConnectivityMatrix() = default;
  ConnectivityMatrix(std::size_t n, bool strict) : n_(n), strict_(strict), bits_(n * n, 0) {
    for (std::size_t v = 0; v < n; ++v) bits_[v * n + v] = 1;
  }

  std::size_t size() const noexcept { return n_; }
  bool strict() const noexcept { return strict_; }
  bool operator()(VertexId from, VertexId to) const { return bits_[from * n_ + to] != 0; }
  void set(VertexId from, VertexId to, bool value = true) { bits_[from * n_ + to] = value ? 1 : 0; }

  /// Number of vertices reachable from v, v included.
  std::size_t out_count(VertexId v) const;
  /// Number of vertices that reach v, v included.
  std::size_t in_count(VertexId v) const;

  bool operator==(const ConnectivityMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  bool strict_ = true;
  std::vector<std::uint8_t> bits_;
};

/// Earliest arrival label at every vertex from s (0 for s itself, -1 when
/// unreachable).
std::vector<Time> earliest_arrival(const TemporalGraph& g, VertexId s, bool strict);

ConnectivityMatrix reachability_matrix(const TemporalGraph& g, bool strict);

}  // namespace tempo_btw
