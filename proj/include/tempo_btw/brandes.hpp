#pragma once

// Brandes-style temporal betweenness computed directly on the temporal graph:
//  - strict / non-strict shortest and shortest-foremost betweenness from one
//    breadth-first traversal of vertex appearances per source;
//  - strict prefix-foremost betweenness from a time-ordered traversal of
//    transitions per source.
//
// Path counts and dependencies are templated on the number type: `double`
// for production runs, `Rational` for exact checks.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "tempo_btw/graph.hpp"
#include "tempo_btw/number.hpp"
#include "tempo_btw/variant.hpp"

namespace tempo_btw {

using BetweennessVector = BasicBetweenness<double>;
using ExactBetweenness = BasicBetweenness<Rational>;

/// Dense numbering of the appearances (v, t) that can actually occur: (v, 0)
/// for every vertex plus (v, t) for every label t incident to v. Tables keyed
/// by appearance are sized by this count, not by |V| * T.
class AppearanceIndex {
 public:
  using Slot = std::uint32_t;

  /// One step of the traversal: neighbor w reached at label t, landing in `slot`.
  struct Hop {
    VertexId w;
    Time t;
    Slot slot;
  };

  explicit AppearanceIndex(const TemporalGraph& g);

  std::size_t size() const noexcept { return appearances_.size(); }
  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  const VertexAppearance& appearance(Slot s) const { return appearances_[s]; }
  /// Slot of (v, 0).
  Slot source_slot(VertexId v) const { return offsets_[v]; }
  /// Slot of (v, t), or -1 cast to Slot if (v, t) cannot occur.
  Slot find(VertexId v, Time t) const;
  static constexpr Slot kNone = static_cast<Slot>(-1);

  /// Hops out of v sorted by label.
  std::span<const Hop> hops(VertexId v) const { return hops_[v]; }
  /// Hops out of v usable after arriving at label t.
  std::span<const Hop> hops_after(VertexId v, Time t, bool strict) const;

 private:
  std::vector<VertexAppearance> appearances_;
  std::vector<Slot> offsets_;
  std::vector<std::vector<Hop>> hops_;
};

/// Per-source tables of the shortest / shortest-foremost traversal.
template <class Num>
struct SourceState {
  using Slot = AppearanceIndex::Slot;

  VertexId source = 0;
  bool strict = true;
  std::shared_ptr<const AppearanceIndex> index;

  // On appearances reached only by walks back to their own vertex these hold
  // walk values; such appearances are dead ends with zero dependency.
  std::vector<int> dist_app;              ///< hops of a t-shortest path, -1 unvisited
  std::vector<Num> sigma_app;             ///< number of t-shortest paths
  std::vector<std::vector<Slot>> preds;   ///< predecessor appearances
  std::vector<int> dist_v;                ///< length of a shortest path, -1 unreachable
  std::vector<Num> sigma_v;               ///< number of shortest paths
  std::vector<Time> t_min;                ///< earliest arrival, -1 unreachable
  std::vector<Slot> visit_order;          ///< discovery order, (s, 0) first

  int dist(VertexAppearance a) const;
  Num sigma(VertexAppearance a) const;
  std::vector<VertexAppearance> predecessors(VertexAppearance a) const;
  std::size_t reachable_count() const;
};

/// Dependencies of one source on every appearance, indexed by slot. Each
/// entry includes the seed term for the pair (s, v) itself.
template <class Num>
struct Dependencies {
  std::vector<Num> shortest;
  std::vector<Num> shortest_foremost;
};

/// Betweenness of vertex appearances, keyed by (v, t).
template <class Num>
using AppearanceBetweenness = std::map<VertexAppearance, Num>;

template <class Num>
struct ShortestBetweenness {
  BasicBetweenness<Num> shortest;
  BasicBetweenness<Num> shortest_foremost;
};

struct EngineOptions {
  /// Worker threads over sources. 1 is the deterministic reference mode.
  unsigned threads = 1;
};

template <class Num>
SourceState<Num> single_source_shortest(const TemporalGraph& g, VertexId s, bool strict);

template <class Num>
SourceState<Num> single_source_shortest(std::shared_ptr<const AppearanceIndex> index,
                                        const TemporalGraph& g, VertexId s, bool strict);

template <class Num>
Dependencies<Num> accumulate_dependencies(const SourceState<Num>& state);

template <class Num>
ShortestBetweenness<Num> betweenness_shortest(const TemporalGraph& g, bool strict,
                                              EngineOptions options = {});

/// Summed dependencies over all sources, i.e. the appearance betweenness
/// including the (s, 0) appearances.
template <class Num>
std::pair<AppearanceBetweenness<Num>, AppearanceBetweenness<Num>> appearance_betweenness_shortest(
    const TemporalGraph& g, bool strict);

/// C(v) = sum_t C^(v, t) - sum_w (A[v][w] + A[w][v]) + 1.
template <class Num>
std::vector<Num> appearance_to_vertex_scores(const AppearanceBetweenness<Num>& appearance_scores,
                                             const ConnectivityMatrix& a);

/// Per-source tables of the strict prefix-foremost traversal.
template <class Num>
struct PrefixForemostState {
  VertexId source = 0;
  std::vector<Time> t_min;                   ///< -1 unreachable
  std::vector<Num> sigma;                    ///< number of prefix-foremost paths
  std::vector<std::vector<VertexId>> preds;  ///< predecessor vertices
  std::vector<VertexId> visit_order;         ///< first-arrival order, source excluded

  std::size_t reachable_count() const;
};

template <class Num>
PrefixForemostState<Num> single_source_prefix_foremost(const TemporalGraph& g, VertexId s);

template <class Num>
BasicBetweenness<Num> betweenness_prefix_foremost(const TemporalGraph& g, EngineOptions options = {});

/// Runs the temporal engine for one of the polynomial variants.
template <class Num>
BasicBetweenness<Num> betweenness(const TemporalGraph& g, const Variant& variant,
                                  EngineOptions options = {});

}  // namespace tempo_btw
