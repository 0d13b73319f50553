#pragma once

// Static expansions: directed graphs on copies v_0 .. v_{T+1} of every vertex
// whose source-to-terminal shortest paths are in bijection with the optimal
// temporal paths of the underlying temporal graph. Betweenness restricted to
// sources {v_0} and terminals {w_{T+1} : w != v} is projected back onto
// vertices by summing over v_1 .. v_T.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tempo_btw/brandes.hpp"
#include "tempo_btw/graph.hpp"

namespace tempo_btw {

struct ExpansionArc {
  std::uint32_t tail;
  std::uint32_t head;
  std::int64_t weight;
  /// Index of the generating time edge in TemporalGraph::edges(). Arcs with the
  /// same endpoints but different generating edges stand for different
  /// transitions and are kept as parallel arcs.
  std::uint32_t edge = 0;
};

/// Directed multigraph with positive integer arc weights, stored by tail.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  WeightedDigraph(std::size_t n, std::vector<ExpansionArc> arcs);

  std::size_t num_vertices() const noexcept { return first_out_.empty() ? 0 : first_out_.size() - 1; }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }
  /// Arcs sorted by tail.
  std::span<const ExpansionArc> arcs() const noexcept { return arcs_; }
  std::span<const ExpansionArc> out_arcs(std::uint32_t x) const {
    return std::span<const ExpansionArc>(arcs_).subspan(first_out_[x], first_out_[x + 1] - first_out_[x]);
  }

 private:
  std::vector<ExpansionArc> arcs_;
  std::vector<std::size_t> first_out_;
};

/// Sources and, per source, the terminals whose pair dependencies count.
struct SZInstance {
  std::vector<std::uint32_t> sources;
  std::vector<std::vector<std::uint32_t>> terminals;  ///< parallel to `sources`
};

class StaticExpansion {
 public:
  StaticExpansion() = default;

  std::size_t num_base_vertices() const noexcept { return n_; }
  Time lifetime() const noexcept { return lifetime_; }
  bool strict() const noexcept { return strict_; }
  bool weighted() const noexcept { return weighted_; }

  const WeightedDigraph& graph() const noexcept { return graph_; }
  std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }
  std::size_t num_arcs() const noexcept { return graph_.num_arcs(); }
  /// Copies of one time edge's arc that were merged (strict edges at the last
  /// label produce the same internal and terminal arc).
  std::size_t collapsed_arcs() const noexcept { return collapsed_; }

  /// Expansion vertex of appearance v_t, t in 0..T+1.
  std::uint32_t id(VertexId v, Time t) const {
    return static_cast<std::uint32_t>(v * stride() + static_cast<std::size_t>(t));
  }
  VertexId base_vertex(std::uint32_t x) const { return static_cast<VertexId>(x / stride()); }
  Time time_index(std::uint32_t x) const { return static_cast<Time>(x % stride()); }
  bool is_terminal(std::uint32_t x) const { return time_index(x) == lifetime_ + 1; }

  /// S = {v_0}, Z(v_0) = {w_{T+1} : w != v}.
  SZInstance sz_instance() const;

  friend StaticExpansion build_expansion_shortest(const TemporalGraph& g, bool strict);
  friend StaticExpansion build_expansion_shortest_foremost(const TemporalGraph& g, bool strict);

 private:
  static StaticExpansion build(const TemporalGraph& g, bool strict, bool weighted);
  std::size_t stride() const noexcept { return static_cast<std::size_t>(lifetime_) + 2; }

  std::size_t n_ = 0;
  Time lifetime_ = 0;
  bool strict_ = true;
  bool weighted_ = false;
  std::size_t collapsed_ = 0;
  WeightedDigraph graph_;
};

/// Unweighted expansion. For each time edge ({v,w}, t) and each 0 <= t' <= t:
/// arcs v_{t'} -> w_t (non-strict) or v_{t'} -> w_{t+1} (strict), the terminal
/// arc v_{t'} -> w_{T+1}, and the same with v and w swapped.
StaticExpansion build_expansion_shortest(const TemporalGraph& g, bool strict);

/// Same arcs; internal arcs weigh 1, a terminal arc generated by a time edge
/// with label t weighs (n + 1) * (t + 1), so arrival time dominates hop count.
StaticExpansion build_expansion_shortest_foremost(const TemporalGraph& g, bool strict);

template <class Num>
struct SZBetweennessResult {
  std::vector<Num> scores;  ///< indexed by expansion vertex
};

/// S-Z betweenness: sum over s in S \ {x} and z in Z(s) \ {x} of the pair
/// dependency of (s, z) on x, with weighted shortest-path counts.
template <class Num>
SZBetweennessResult<Num> sz_brandes(const WeightedDigraph& h, const SZInstance& instance,
                                    EngineOptions options = {});

template <class Num>
SZBetweennessResult<Num> sz_brandes(const StaticExpansion& h, EngineOptions options = {}) {
  return sz_brandes<Num>(h.graph(), h.sz_instance(), options);
}

/// C(v) = sum over t in 1..T of the S-Z betweenness of v_t.
template <class Num>
std::vector<Num> project_scores(const StaticExpansion& h, const SZBetweennessResult<Num>& r);

/// Expansion engine for shortest / shortest-foremost variants.
template <class Num>
BasicBetweenness<Num> betweenness_via_expansion(const TemporalGraph& g, const Variant& variant,
                                                EngineOptions options = {});

/// Debug dump: one `tail head weight` line per arc, vertices written as
/// `label@t`.
void write_expansion(std::ostream& out, const StaticExpansion& h, const TemporalGraph& g);

}  // namespace tempo_btw
