#pragma once

// Test-only reference computations, written independently of the library's
// oracle: paths are grown edge by edge over the raw time-edge list.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tempo_btw/graph.hpp"
#include "tempo_btw/number.hpp"
#include "tempo_btw/variant.hpp"

namespace test_support {

using tempo_btw::BigInt;
using tempo_btw::Criterion;
using tempo_btw::Rational;
using tempo_btw::TemporalGraph;
using tempo_btw::Time;
using tempo_btw::VertexId;

struct Step {
  VertexId to;
  Time t;
};

struct Walk {
  VertexId start;
  std::vector<Step> steps;
};

inline void grow(const TemporalGraph& g, bool strict, Walk& w, std::vector<char>& used,
                 std::vector<Walk>& out) {
  const VertexId here = w.steps.empty() ? w.start : w.steps.back().to;
  const Time now = w.steps.empty() ? 0 : w.steps.back().t;
  for (const auto& e : g.edges()) {
    VertexId next;
    if (e.u == here) {
      next = e.v;
    } else if (e.v == here) {
      next = e.u;
    } else {
      continue;
    }
    if (strict ? e.t <= now : e.t < now) continue;
    if (used[next]) continue;
    used[next] = 1;
    w.steps.push_back({next, e.t});
    out.push_back(w);
    grow(g, strict, w, used, out);
    w.steps.pop_back();
    used[next] = 0;
  }
}

/// Every non-empty temporal path from s.
inline std::vector<Walk> all_paths_from(const TemporalGraph& g, VertexId s, bool strict) {
  std::vector<Walk> out;
  Walk w{s, {}};
  std::vector<char> used(g.num_vertices(), 0);
  used[s] = 1;
  grow(g, strict, w, used, out);
  return out;
}

/// Definitional betweenness for one criterion.
inline std::vector<Rational> brute_betweenness(const TemporalGraph& g, Criterion c, bool strict) {
  const std::size_t n = g.num_vertices();
  std::vector<Rational> score(n, Rational(0));
  for (VertexId s = 0; s < n; ++s) {
    const auto paths = all_paths_from(g, s, strict);
    std::vector<Time> first(n, 1 << 30);
    for (const auto& p : paths) first[p.steps.back().to] = std::min(first[p.steps.back().to], p.steps.back().t);
    for (VertexId z = 0; z < n; ++z) {
      if (z == s) continue;
      std::vector<const Walk*> to_z;
      for (const auto& p : paths) {
        if (p.steps.back().to != z) continue;
        if (c == Criterion::kPrefixForemost) {
          bool ok = true;
          for (const auto& st : p.steps) ok = ok && st.t == first[st.to];
          if (!ok) continue;
        }
        to_z.push_back(&p);
      }
      if (to_z.empty()) continue;
      auto cost = [&](const Walk& p) -> std::pair<std::int64_t, std::int64_t> {
        const std::int64_t hops = static_cast<std::int64_t>(p.steps.size());
        const std::int64_t arr = p.steps.back().t;
        const std::int64_t dur = g.raw_time(p.steps.back().t) - g.raw_time(p.steps.front().t);
        switch (c) {
          case Criterion::kShortest: return {hops, 0};
          case Criterion::kForemost: return {arr, 0};
          case Criterion::kFastest: return {dur, 0};
          case Criterion::kShortestForemost: return {arr, hops};
          case Criterion::kPrefixForemost: return {arr, 0};
        }
        return {0, 0};
      };
      auto best = cost(*to_z.front());
      for (const Walk* p : to_z) best = std::min(best, cost(*p));
      BigInt sigma = 0;
      std::map<VertexId, BigInt> through;
      for (const Walk* p : to_z) {
        if (cost(*p) != best) continue;
        ++sigma;
        for (std::size_t i = 0; i + 1 < p->steps.size(); ++i) ++through[p->steps[i].to];
      }
      for (const auto& [v, k] : through) score[v] += Rational(k, sigma);
    }
  }
  return score;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - tempo_btw::to_double(b[i])));
  return worst;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline std::string three_paths_text() {
  return "s a 1\ns b1 1\ns c1 3\nb1 b2 2\nb2 b3 3\nc1 c2 4\nb3 z 4\nc2 z 5\na z 5\n";
}

}  // namespace test_support
