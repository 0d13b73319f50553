#include "tempo_btw/expansion.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <queue>
#include <tuple>

#include "parallel.hpp"
#include "tempo_btw/errors.hpp"

namespace tempo_btw {

WeightedDigraph::WeightedDigraph(std::size_t n, std::vector<ExpansionArc> arcs) : arcs_(std::move(arcs)) {
  for (const auto& a : arcs_) {
    if (a.tail >= n || a.head >= n) throw DomainError("arc endpoint out of range");
    if (a.weight <= 0) throw DomainError("arc weights must be positive");
  }
  std::stable_sort(arcs_.begin(), arcs_.end(),
                   [](const ExpansionArc& a, const ExpansionArc& b) { return a.tail < b.tail; });
  first_out_.assign(n + 1, 0);
  for (const auto& a : arcs_) ++first_out_[a.tail + 1];
  for (std::size_t x = 0; x < n; ++x) first_out_[x + 1] += first_out_[x];
}

SZInstance StaticExpansion::sz_instance() const {
  SZInstance inst;
  for (VertexId v = 0; v < n_; ++v) {
    inst.sources.push_back(id(v, 0));
    auto& z = inst.terminals.emplace_back();
    for (VertexId w = 0; w < n_; ++w) {
      if (w != v) z.push_back(id(w, lifetime_ + 1));
    }
  }
  return inst;
}

StaticExpansion StaticExpansion::build(const TemporalGraph& g, bool strict, bool weighted) {
  StaticExpansion h;
  h.n_ = g.num_vertices();
  h.lifetime_ = g.lifetime();
  h.strict_ = strict;
  h.weighted_ = weighted;

  const Time terminal = h.lifetime_ + 1;
  const auto n_plus_one = static_cast<std::int64_t>(h.n_) + 1;
  std::vector<ExpansionArc> arcs;
  const auto edges = g.edges();
  for (std::uint32_t ei = 0; ei < edges.size(); ++ei) {
    const TimeEdge& e = edges[ei];
    const Time head_index = strict ? e.t + 1 : e.t;
    // Weight of an arc is decided by its head: anything into a terminal copy
    // carries the arrival label of the generating time edge.
    const std::int64_t terminal_weight = weighted ? n_plus_one * (e.t + 1) : 1;
    const std::int64_t internal_weight = head_index == terminal ? terminal_weight : 1;
    for (const auto& [from, to] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      for (Time tp = 0; tp <= e.t; ++tp) {
        const std::uint32_t tail = h.id(from, tp);
        if (head_index == terminal) {
          // Strict edge at the last label: internal and terminal arc coincide.
          ++h.collapsed_;
        } else {
          arcs.push_back({tail, h.id(to, head_index), internal_weight, ei});
        }
        arcs.push_back({tail, h.id(to, terminal), terminal_weight, ei});
      }
    }
  }
  h.graph_ = WeightedDigraph(h.n_ * h.stride(), std::move(arcs));
  return h;
}

StaticExpansion build_expansion_shortest(const TemporalGraph& g, bool strict) {
  return StaticExpansion::build(g, strict, false);
}

StaticExpansion build_expansion_shortest_foremost(const TemporalGraph& g, bool strict) {
  return StaticExpansion::build(g, strict, true);
}

template <class Num>
SZBetweennessResult<Num> sz_brandes(const WeightedDigraph& h, const SZInstance& instance, EngineOptions options) {
  if (instance.terminals.size() != instance.sources.size()) throw DomainError("one terminal set per source required");
  const std::size_t n = h.num_vertices();
  const std::size_t num_sources = instance.sources.size();
  const unsigned workers = detail::worker_count(num_sources, options.threads);
  std::vector<std::vector<Num>> acc(workers, std::vector<Num>(n, Num(0)));

  detail::for_each_source(num_sources, options.threads, [&](unsigned worker, VertexId si) {
    const std::uint32_t s = instance.sources[si];
    std::vector<std::int64_t> dist(n, -1);
    std::vector<Num> sigma(n, Num(0));
    std::vector<std::vector<std::uint32_t>> preds(n);  // one entry per arc, parallel arcs repeat
    std::vector<char> settled(n, 0);
    std::vector<char> is_terminal(n, 0);
    for (const auto z : instance.terminals[si]) is_terminal[z] = 1;
    std::vector<std::uint32_t> order;

    using Item = std::pair<std::int64_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[s] = 0;
    sigma[s] = Num(1);
    queue.push({0, s});
    while (!queue.empty()) {
      const auto [d, x] = queue.top();
      queue.pop();
      if (settled[x] || d != dist[x]) continue;
      settled[x] = 1;
      order.push_back(x);
      for (const auto& arc : h.out_arcs(x)) {
        const std::int64_t nd = d + arc.weight;
        const auto y = arc.head;
        if (dist[y] == -1 || nd < dist[y]) {
          dist[y] = nd;
          sigma[y] = sigma[x];
          preds[y].assign(1, x);
          queue.push({nd, y});
        } else if (nd == dist[y]) {
          sigma[y] += sigma[x];
          preds[y].push_back(x);
        }
      }
    }

    std::vector<Num> delta(n, Num(0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto y = *it;
      if (preds[y].empty()) continue;
      const Num coeff = (Num(is_terminal[y] ? 1 : 0) + delta[y]) / sigma[y];
      for (const auto p : preds[y]) delta[p] += sigma[p] * coeff;
    }
    for (const auto x : order) {
      if (x != s) acc[worker][x] += delta[x];
    }
  });
  return {detail::reduce(acc)};
}

template <class Num>
std::vector<Num> project_scores(const StaticExpansion& h, const SZBetweennessResult<Num>& r) {
  if (r.scores.size() != h.num_vertices()) throw DomainError("S-Z result does not match the expansion");
  std::vector<Num> out(h.num_base_vertices(), Num(0));
  for (VertexId v = 0; v < h.num_base_vertices(); ++v) {
    for (Time t = 1; t <= h.lifetime(); ++t) out[v] += r.scores[h.id(v, t)];
  }
  return out;
}

template <class Num>
BasicBetweenness<Num> betweenness_via_expansion(const TemporalGraph& g, const Variant& variant,
                                                EngineOptions options) {
  validate(variant);
  StaticExpansion h;
  if (variant.criterion == Criterion::kShortest) {
    h = build_expansion_shortest(g, variant.strict);
  } else if (variant.criterion == Criterion::kShortestForemost) {
    h = build_expansion_shortest_foremost(g, variant.strict);
  } else {
    throw ConfigError("no static expansion for " + variant_name(variant));
  }
  return {variant, project_scores(h, sz_brandes<Num>(h, options))};
}

void write_expansion(std::ostream& out, const StaticExpansion& h, const TemporalGraph& g) {
  auto name = [&](std::uint32_t x) { return g.label(h.base_vertex(x)) + "@" + std::to_string(h.time_index(x)); };
  for (const auto& a : h.graph().arcs()) out << name(a.tail) << ' ' << name(a.head) << ' ' << a.weight << '\n';
}

#define TEMPO_BTW_INSTANTIATE(Num)                                                                            \
  template SZBetweennessResult<Num> sz_brandes<Num>(const WeightedDigraph&, const SZInstance&, EngineOptions); \
  template std::vector<Num> project_scores<Num>(const StaticExpansion&, const SZBetweennessResult<Num>&);     \
  template BasicBetweenness<Num> betweenness_via_expansion<Num>(const TemporalGraph&, const Variant&,          \
                                                                EngineOptions);

TEMPO_BTW_INSTANTIATE(double)
TEMPO_BTW_INSTANTIATE(Rational)

#undef TEMPO_BTW_INSTANTIATE

}  // namespace tempo_btw
