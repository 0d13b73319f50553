#pragma once

// Exhaustive ground truth. Every temporal path is enumerated by depth-first
// search, so all functions here are exponential in the worst case and guarded
// by OracleLimits.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tempo_btw/graph.hpp"
#include "tempo_btw/number.hpp"
#include "tempo_btw/variant.hpp"

namespace tempo_btw {

struct OracleLimits {
  /// Cap on the number of path prefixes explored by one enumeration.
  std::size_t max_paths = 1'000'000;
  /// Largest graph the oracle accepts.
  std::size_t max_vertices = 12;

  /// Applies overrides of the form "max_paths=N,max_vertices=M" from the
  /// TEMPO_BTW_LIMITS environment variable. Throws ConfigError if it is
  /// malformed.
  static OracleLimits from_env(OracleLimits defaults);
  static OracleLimits parse(const std::string& text, OracleLimits defaults);
};

/// All temporal paths from s to z in DFS order (neighbors by (t, u)). s == z
/// yields the single empty path.
std::vector<TemporalPath> enumerate_paths(const TemporalGraph& g, VertexId s, VertexId z, bool strict,
                                          const OracleLimits& limits = {});

/// All non-empty temporal paths starting at s, any endpoint.
std::vector<TemporalPath> enumerate_paths_from(const TemporalGraph& g, VertexId s, bool strict,
                                               const OracleLimits& limits = {});

/// Temporal walks (vertices may repeat) from s to z with at most max_length
/// transitions.
std::vector<TemporalPath> enumerate_walks(const TemporalGraph& g, VertexId s, VertexId z, bool strict,
                                          std::size_t max_length, const OracleLimits& limits = {});

/// Duration of a path: arrival minus departure, on raw timestamps when the
/// graph keeps them.
std::int64_t path_duration(const TemporalGraph& g, const TemporalPath& p);

struct OptimalCount {
  BigInt sigma = 0;
  /// Optimal paths through each intermediate vertex (endpoints excluded).
  std::map<VertexId, BigInt> per_vertex;
  /// Optimal paths arriving at v exactly at t, for every appearance on the
  /// path including (s, 0) and the target.
  std::map<VertexAppearance, BigInt> per_appearance;
  /// Hops (sh), arrival (fm, shfm, pfm) or duration (fa); -1 if no path.
  std::int64_t opt_value = -1;
  /// Hops of the optimal paths for shfm, otherwise equal to opt_value.
  std::int64_t opt_secondary = -1;
};

/// Optimal s-z paths under the variant, by filtering the enumeration.
OptimalCount count_optimal(const TemporalGraph& g, VertexId s, VertexId z, const Variant& variant,
                           const OracleLimits& limits = {});

/// Betweenness from the definition: sum over s != v != z with a temporal
/// s-z path of sigma_sz(v) / sigma_sz, in exact arithmetic.
BasicBetweenness<Rational> exact_betweenness(const TemporalGraph& g, const Variant& variant,
                                             const OracleLimits& limits = {});

/// Same for several variants of one strictness, sharing one enumeration per
/// source. Results follow the order of `criteria`.
std::vector<BasicBetweenness<Rational>> exact_betweenness(const TemporalGraph& g, bool strict,
                                                          const std::vector<Criterion>& criteria,
                                                          const OracleLimits& limits = {});

/// Hops of a t-shortest path from s for every reachable appearance (v, t),
/// (s, 0) included.
std::map<VertexAppearance, int> appearance_distances(const TemporalGraph& g, VertexId s, bool strict,
                                                     const OracleLimits& limits = {});

}  // namespace tempo_btw
