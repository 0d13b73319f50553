#include "tempo_btw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "tempo_btw/errors.hpp"

namespace tempo_btw {

TemporalGraph TemporalGraph::build(std::size_t n, std::vector<TimeEdge> edges,
                                   std::vector<std::string> labels,
                                   std::vector<std::int64_t> raw_times, BuildReport* report) {
  if (!labels.empty() && labels.size() != n) {
    throw DomainError("label count " + std::to_string(labels.size()) +
                      " does not match vertex count " + std::to_string(n));
  }
  BuildReport local;
  TemporalGraph g;
  g.labels_ = std::move(labels);
  if (g.labels_.empty()) {
    g.labels_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) g.labels_.push_back(std::to_string(v));
  }

  std::vector<TimeEdge> kept;
  kept.reserve(edges.size());
  for (TimeEdge e : edges) {
    if (e.u >= n || e.v >= n) throw DomainError("time edge endpoint out of range");
    if (e.t < 1) throw ValueError("time labels must be >= 1, got " + std::to_string(e.t));
    if (e.u == e.v) {
      ++local.self_loops_dropped;
      continue;
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end(), [](const TimeEdge& a, const TimeEdge& b) {
    return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
  });
  const auto last = std::unique(kept.begin(), kept.end());
  local.duplicates_removed = static_cast<std::size_t>(kept.end() - last);
  kept.erase(last, kept.end());

  g.edges_ = std::move(kept);
  g.lifetime_ = g.edges_.empty() ? 0 : g.edges_.back().t;
  if (!raw_times.empty() && raw_times.size() < static_cast<std::size_t>(g.lifetime_)) {
    throw DomainError("raw time table does not cover the lifetime");
  }
  g.raw_times_ = std::move(raw_times);

  g.adjacency_.assign(n, {});
  for (const TimeEdge& e : g.edges_) {
    g.adjacency_[e.u].push_back({e.v, e.t});
    g.adjacency_[e.v].push_back({e.u, e.t});
  }
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end(),
              [](const Neighbor& a, const Neighbor& b) { return std::tie(a.t, a.u) < std::tie(b.t, b.u); });
  }
  if (report) *report = local;
  return g;
}

std::span<const Neighbor> TemporalGraph::neighborhood(VertexId v) const {
  if (v >= adjacency_.size()) throw DomainError("unknown vertex " + std::to_string(v));
  return adjacency_[v];
}

std::optional<VertexId> TemporalGraph::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::int64_t TemporalGraph::raw_time(Time t) const {
  if (raw_times_.empty() || t < 1) return t;
  return raw_times_.at(static_cast<std::size_t>(t - 1));
}

bool TemporalGraph::has_edge(VertexId a, VertexId b, Time t) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), Neighbor{b, t},
                            [](const Neighbor& x, const Neighbor& y) {
                              return std::tie(x.t, x.u) < std::tie(y.t, y.u);
                            });
}

bool is_temporal_walk(const TemporalGraph& g, const TemporalPath& p, bool strict) {
  for (std::size_t i = 0; i < p.transitions.size(); ++i) {
    const Transition& tr = p.transitions[i];
    if (tr.from == tr.to || !g.has_edge(tr.from, tr.to, tr.t)) return false;
    if (i > 0) {
      const Transition& prev = p.transitions[i - 1];
      if (prev.to != tr.from) return false;
      if (strict ? !(prev.t < tr.t) : !(prev.t <= tr.t)) return false;
    }
  }
  return true;
}

bool is_temporal_path(const TemporalGraph& g, const TemporalPath& p, bool strict) {
  if (!is_temporal_walk(g, p, strict)) return false;
  if (p.transitions.empty()) return true;
  std::vector<VertexId> seen{p.transitions.front().from};
  for (const Transition& tr : p.transitions) seen.push_back(tr.to);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::size_t ConnectivityMatrix::out_count(VertexId v) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < n_; ++w) c += bits_[v * n_ + w];
  return c;
}

std::size_t ConnectivityMatrix::in_count(VertexId v) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < n_; ++w) c += bits_[w * n_ + v];
  return c;
}

std::vector<Time> earliest_arrival(const TemporalGraph& g, VertexId s, bool strict) {
  if (s >= g.num_vertices()) throw DomainError("unknown vertex " + std::to_string(s));
  std::vector<Time> arrival(g.num_vertices(), -1);
  arrival[s] = 0;
  const auto edges = g.edges();
  std::vector<std::pair<VertexId, Time>> updates;
  for (std::size_t begin = 0; begin < edges.size();) {
    const Time t = edges[begin].t;
    std::size_t end = begin;
    while (end < edges.size() && edges[end].t == t) ++end;
    const auto group = edges.subspan(begin, end - begin);
    if (strict) {
      // Arrivals at t cannot be used again at t.
      updates.clear();
      for (const TimeEdge& e : group) {
        if (arrival[e.u] >= 0 && arrival[e.u] < t && arrival[e.v] < 0) updates.emplace_back(e.v, t);
        if (arrival[e.v] >= 0 && arrival[e.v] < t && arrival[e.u] < 0) updates.emplace_back(e.u, t);
      }
      for (auto [v, at] : updates) arrival[v] = at;
    } else {
      bool changed = true;
      while (changed) {
        changed = false;
        for (const TimeEdge& e : group) {
          if (arrival[e.u] >= 0 && arrival[e.v] < 0) {
            arrival[e.v] = t;
            changed = true;
          } else if (arrival[e.v] >= 0 && arrival[e.u] < 0) {
            arrival[e.u] = t;
            changed = true;
          }
        }
      }
    }
    begin = end;
  }
  return arrival;
}

ConnectivityMatrix reachability_matrix(const TemporalGraph& g, bool strict) {
  const std::size_t n = g.num_vertices();
  ConnectivityMatrix a(n, strict);
  for (VertexId s = 0; s < n; ++s) {
    const auto arrival = earliest_arrival(g, s, strict);
    for (VertexId z = 0; z < n; ++z) {
      if (arrival[z] >= 0) a.set(s, z);
    }
  }
  return a;
}

}  // namespace tempo_btw
