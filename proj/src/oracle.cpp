#include "tempo_btw/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string_view>
#include <tuple>

#include "tempo_btw/errors.hpp"

namespace tempo_btw {
namespace {

void check_size(const TemporalGraph& g, const OracleLimits& limits) {
  if (g.num_vertices() > limits.max_vertices) {
    throw ResourceError("max_vertices", "oracle refuses graphs with more than " +
                                            std::to_string(limits.max_vertices) + " vertices (got " +
                                            std::to_string(g.num_vertices()) + ")");
  }
}

void check_vertex(const TemporalGraph& g, VertexId v) {
  if (v >= g.num_vertices()) throw DomainError("unknown vertex " + std::to_string(v));
}

// Depth-first search over temporal walks from one source. `visit` sees every
// non-empty prefix. With `simple` set, vertices already on the walk are not
// entered again, which yields exactly the temporal paths.
class Dfs {
 public:
  Dfs(const TemporalGraph& g, bool strict, bool simple, std::size_t max_length, const OracleLimits& limits)
      : g_(g), strict_(strict), simple_(simple), max_length_(max_length), limits_(limits),
        on_path_(g.num_vertices(), 0) {}

  template <class Visit>
  void run(VertexId s, Visit&& visit) {
    explored_ = 0;
    path_.transitions.clear();
    on_path_.assign(g_.num_vertices(), 0);
    on_path_[s] = 1;
    extend(s, 0, visit);
  }

 private:
  template <class Visit>
  void extend(VertexId v, Time now, Visit& visit) {
    if (path_.length() >= max_length_) return;
    for (const Neighbor& nb : g_.neighborhood(v)) {
      if (strict_ ? nb.t <= now : nb.t < now) continue;
      if (simple_ && on_path_[nb.u]) continue;
      if (++explored_ > limits_.max_paths) {
        throw ResourceError("max_paths", "oracle explored more than " + std::to_string(limits_.max_paths) +
                                             " path prefixes");
      }
      path_.transitions.push_back({v, nb.u, nb.t});
      ++on_path_[nb.u];
      visit(static_cast<const TemporalPath&>(path_));
      extend(nb.u, nb.t, visit);
      --on_path_[nb.u];
      path_.transitions.pop_back();
    }
  }

  const TemporalGraph& g_;
  bool strict_;
  bool simple_;
  std::size_t max_length_;
  const OracleLimits& limits_;
  std::vector<int> on_path_;
  TemporalPath path_;
  std::size_t explored_ = 0;
};

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct PathFacts {
  const TemporalPath* path;
  std::int64_t hops;
  std::int64_t arrival;
  std::int64_t duration;
  bool prefix_foremost;
};

// Optimal paths among `paths` (all from one source to one target).
OptimalCount select_optimal(const std::vector<PathFacts>& paths, VertexId s, Criterion c) {
  OptimalCount out;
  std::vector<const PathFacts*> best;
  auto key = [c](const PathFacts& p) -> std::pair<std::int64_t, std::int64_t> {
    switch (c) {
      case Criterion::kShortest: return {p.hops, p.hops};
      case Criterion::kForemost: return {p.arrival, p.arrival};
      case Criterion::kFastest: return {p.duration, p.duration};
      case Criterion::kShortestForemost: return {p.arrival, p.hops};
      case Criterion::kPrefixForemost: return {p.arrival, p.arrival};
    }
    return {0, 0};
  };
  for (const auto& p : paths) {
    if (c == Criterion::kPrefixForemost && !p.prefix_foremost) continue;
    if (!best.empty()) {
      const auto k = key(p);
      const auto b = key(*best.front());
      if (k > b) continue;
      if (k < b) best.clear();
    }
    best.push_back(&p);
  }
  if (best.empty()) return out;
  std::tie(out.opt_value, out.opt_secondary) = key(*best.front());
  out.sigma = best.size();
  for (const PathFacts* p : best) {
    const auto& tr = p->path->transitions;
    ++out.per_appearance[{s, 0}];
    for (std::size_t i = 0; i < tr.size(); ++i) {
      ++out.per_appearance[{tr[i].to, tr[i].t}];
      if (i + 1 < tr.size()) ++out.per_vertex[tr[i].to];
    }
  }
  return out;
}

OptimalCount trivial_count(VertexId s) {
  OptimalCount out;
  out.sigma = 1;
  out.per_appearance[{s, 0}] = 1;
  out.opt_value = 0;
  out.opt_secondary = 0;
  return out;
}

// Paths from s grouped by their last vertex, with the facts every criterion
// needs. Earliest arrivals for the prefix-foremost check come from the same
// enumeration.
struct SourcePaths {
  std::vector<TemporalPath> paths;
  std::vector<std::vector<PathFacts>> by_target;
};

SourcePaths collect(const TemporalGraph& g, VertexId s, bool strict, const OracleLimits& limits) {
  SourcePaths sp;
  sp.paths = enumerate_paths_from(g, s, strict, limits);
  std::vector<std::int64_t> earliest(g.num_vertices(), std::numeric_limits<std::int64_t>::max());
  earliest[s] = 0;
  for (const auto& p : sp.paths) {
    auto& e = earliest[p.transitions.back().to];
    e = std::min<std::int64_t>(e, p.arrival());
  }
  sp.by_target.resize(g.num_vertices());
  for (const auto& p : sp.paths) {
    const bool pfm = std::all_of(p.transitions.begin(), p.transitions.end(),
                                 [&](const Transition& tr) { return tr.t == earliest[tr.to]; });
    sp.by_target[p.transitions.back().to].push_back(
        {&p, static_cast<std::int64_t>(p.length()), p.arrival(), path_duration(g, p), pfm});
  }
  return sp;
}

std::size_t parse_limit(std::string_view value, const std::string& text) {
  std::size_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || value.empty()) throw ConfigError("bad oracle limits: " + text);
  return out;
}

}  // namespace

OracleLimits OracleLimits::parse(const std::string& text, OracleLimits limits) {
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ConfigError("bad oracle limits: " + text);
    const auto key = item.substr(0, eq);
    const auto value = parse_limit(item.substr(eq + 1), text);
    if (key == "max_paths") {
      limits.max_paths = value;
    } else if (key == "max_vertices") {
      limits.max_vertices = value;
    } else {
      throw ConfigError("unknown oracle limit '" + std::string(key) + "'");
    }
  }
  return limits;
}

OracleLimits OracleLimits::from_env(OracleLimits defaults) {
  const char* env = std::getenv("TEMPO_BTW_LIMITS");
  return env ? parse(env, defaults) : defaults;
}

std::vector<TemporalPath> enumerate_paths(const TemporalGraph& g, VertexId s, VertexId z, bool strict,
                                          const OracleLimits& limits) {
  check_size(g, limits);
  check_vertex(g, s);
  check_vertex(g, z);
  if (s == z) return {TemporalPath{}};
  std::vector<TemporalPath> out;
  Dfs(g, strict, true, kUnbounded, limits).run(s, [&](const TemporalPath& p) {
    if (p.transitions.back().to == z) out.push_back(p);
  });
  return out;
}

std::vector<TemporalPath> enumerate_paths_from(const TemporalGraph& g, VertexId s, bool strict,
                                               const OracleLimits& limits) {
  check_size(g, limits);
  check_vertex(g, s);
  std::vector<TemporalPath> out;
  Dfs(g, strict, true, kUnbounded, limits).run(s, [&](const TemporalPath& p) { out.push_back(p); });
  return out;
}

std::vector<TemporalPath> enumerate_walks(const TemporalGraph& g, VertexId s, VertexId z, bool strict,
                                          std::size_t max_length, const OracleLimits& limits) {
  check_size(g, limits);
  check_vertex(g, s);
  check_vertex(g, z);
  std::vector<TemporalPath> out;
  if (s == z) out.emplace_back();
  Dfs(g, strict, false, max_length, limits).run(s, [&](const TemporalPath& p) {
    if (p.transitions.back().to == z) out.push_back(p);
  });
  return out;
}

std::int64_t path_duration(const TemporalGraph& g, const TemporalPath& p) {
  if (p.empty()) return 0;
  return g.raw_time(p.arrival()) - g.raw_time(p.departure());
}

OptimalCount count_optimal(const TemporalGraph& g, VertexId s, VertexId z, const Variant& variant,
                           const OracleLimits& limits) {
  validate(variant);
  check_size(g, limits);
  check_vertex(g, s);
  check_vertex(g, z);
  if (s == z) return trivial_count(s);
  const SourcePaths sp = collect(g, s, variant.strict, limits);
  return select_optimal(sp.by_target[z], s, variant.criterion);
}

std::vector<BasicBetweenness<Rational>> exact_betweenness(const TemporalGraph& g, bool strict,
                                                          const std::vector<Criterion>& criteria,
                                                          const OracleLimits& limits) {
  check_size(g, limits);
  const std::size_t n = g.num_vertices();
  std::vector<BasicBetweenness<Rational>> out;
  for (const Criterion c : criteria) {
    validate({c, strict});
    out.push_back({{c, strict}, std::vector<Rational>(n, Rational(0))});
  }
  for (VertexId s = 0; s < n; ++s) {
    const SourcePaths sp = collect(g, s, strict, limits);
    for (VertexId z = 0; z < n; ++z) {
      if (z == s || sp.by_target[z].empty()) continue;
      for (std::size_t i = 0; i < criteria.size(); ++i) {
        const OptimalCount count = select_optimal(sp.by_target[z], s, criteria[i]);
        if (count.sigma == 0) continue;
        for (const auto& [v, through] : count.per_vertex) out[i].scores[v] += Rational(through, count.sigma);
      }
    }
  }
  return out;
}

BasicBetweenness<Rational> exact_betweenness(const TemporalGraph& g, const Variant& variant,
                                             const OracleLimits& limits) {
  return exact_betweenness(g, variant.strict, {variant.criterion}, limits).front();
}

std::map<VertexAppearance, int> appearance_distances(const TemporalGraph& g, VertexId s, bool strict,
                                                     const OracleLimits& limits) {
  std::map<VertexAppearance, int> out{{{s, 0}, 0}};
  for (const auto& p : enumerate_paths_from(g, s, strict, limits)) {
    const VertexAppearance a{p.transitions.back().to, p.arrival()};
    const int hops = static_cast<int>(p.length());
    auto [it, inserted] = out.emplace(a, hops);
    if (!inserted) it->second = std::min(it->second, hops);
  }
  return out;
}

}  // namespace tempo_btw
