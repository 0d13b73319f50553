#pragma once

#include <cstdint>
#include <random>

#include "tempo_btw/graph.hpp"

namespace tempo_btw {

/// Portable uniform draws on top of mt19937_64 (the std distributions are not
/// reproducible across standard libraries, and seeds are documented).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Each of the n(n-1)/2 * T possible time edges is present independently with
/// probability `density`. Labels stay in 1..T (some may be unused, in which
/// case the lifetime is the largest used label).
TemporalGraph random_temporal_graph(std::size_t n, Time T, double density, Rng& rng);

/// Graph with exactly `m` distinct time edges drawn uniformly from the n, T
/// slot space (m must not exceed it).
TemporalGraph random_temporal_graph_edges(std::size_t n, Time T, std::size_t m, Rng& rng);

}  // namespace tempo_btw
