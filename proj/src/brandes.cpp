#include "tempo_btw/brandes.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>

#include "parallel.hpp"
#include "tempo_btw/errors.hpp"

namespace tempo_btw {

// ---------------------------------------------------------------------------
// AppearanceIndex

AppearanceIndex::AppearanceIndex(const TemporalGraph& g) {
  const std::size_t n = g.num_vertices();
  offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    offsets_[v] = static_cast<Slot>(appearances_.size());
    appearances_.push_back({v, 0});
    for (const Neighbor& nb : g.neighborhood(v)) {
      if (appearances_.back().t != nb.t) appearances_.push_back({v, nb.t});
    }
  }
  offsets_[n] = static_cast<Slot>(appearances_.size());

  hops_.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    const auto nbs = g.neighborhood(v);
    hops_[v].reserve(nbs.size());
    for (const Neighbor& nb : nbs) hops_[v].push_back({nb.u, nb.t, find(nb.u, nb.t)});
  }
}

AppearanceIndex::Slot AppearanceIndex::find(VertexId v, Time t) const {
  if (v + 1 >= offsets_.size()) return kNone;
  const auto first = appearances_.begin() + offsets_[v];
  const auto last = appearances_.begin() + offsets_[v + 1];
  const auto it = std::lower_bound(first, last, VertexAppearance{v, t});
  if (it == last || it->t != t) return kNone;
  return static_cast<Slot>(it - appearances_.begin());
}

std::span<const AppearanceIndex::Hop> AppearanceIndex::hops_after(VertexId v, Time t, bool strict) const {
  const auto& all = hops_[v];
  const auto it = strict ? std::upper_bound(all.begin(), all.end(), t, [](Time x, const Hop& h) { return x < h.t; })
                         : std::lower_bound(all.begin(), all.end(), t, [](const Hop& h, Time x) { return h.t < x; });
  return {it, all.end()};
}

// ---------------------------------------------------------------------------
// SourceState accessors

template <class Num>
int SourceState<Num>::dist(VertexAppearance a) const {
  const auto slot = index->find(a.v, a.t);
  return slot == AppearanceIndex::kNone ? -1 : dist_app[slot];
}

template <class Num>
Num SourceState<Num>::sigma(VertexAppearance a) const {
  const auto slot = index->find(a.v, a.t);
  return slot == AppearanceIndex::kNone ? Num(0) : sigma_app[slot];
}

template <class Num>
std::vector<VertexAppearance> SourceState<Num>::predecessors(VertexAppearance a) const {
  std::vector<VertexAppearance> out;
  const auto slot = index->find(a.v, a.t);
  if (slot == AppearanceIndex::kNone) return out;
  for (Slot p : preds[slot]) out.push_back(index->appearance(p));
  std::sort(out.begin(), out.end());
  return out;
}

template <class Num>
std::size_t SourceState<Num>::reachable_count() const {
  return static_cast<std::size_t>(std::count_if(dist_v.begin(), dist_v.end(), [](int d) { return d >= 0; }));
}

template <class Num>
std::size_t PrefixForemostState<Num>::reachable_count() const {
  return static_cast<std::size_t>(std::count_if(t_min.begin(), t_min.end(), [](Time t) { return t >= 0; }));
}

// ---------------------------------------------------------------------------
// Shortest / shortest-foremost

template <class Num>
SourceState<Num> single_source_shortest(std::shared_ptr<const AppearanceIndex> index, const TemporalGraph& g,
                                        VertexId s, bool strict) {
  using Slot = AppearanceIndex::Slot;
  const std::size_t n = g.num_vertices();
  if (s >= n) throw DomainError("unknown source vertex " + std::to_string(s));

  SourceState<Num> st;
  st.source = s;
  st.strict = strict;
  st.dist_app.assign(index->size(), -1);
  st.sigma_app.assign(index->size(), Num(0));
  st.preds.assign(index->size(), {});
  st.dist_v.assign(n, -1);
  st.sigma_v.assign(n, Num(0));
  st.t_min.assign(n, -1);

  const Slot root = index->source_slot(s);
  st.dist_app[root] = 0;
  st.sigma_app[root] = Num(1);
  st.dist_v[s] = 0;
  st.sigma_v[s] = Num(1);
  st.t_min[s] = 0;
  st.visit_order.push_back(root);

  std::deque<Slot> queue{root};
  while (!queue.empty()) {
    const Slot cur = queue.front();
    queue.pop_front();
    const auto [v, t] = index->appearance(cur);
    const int next = st.dist_app[cur] + 1;
    for (const auto& hop : index->hops_after(v, t, strict)) {
      if (hop.w == s) continue;  // closed walks back to the source
      if (st.dist_app[hop.slot] == -1) {
        st.dist_app[hop.slot] = next;
        if (st.dist_v[hop.w] == -1) st.dist_v[hop.w] = next;
        st.visit_order.push_back(hop.slot);
        queue.push_back(hop.slot);
      }
      if (st.dist_app[hop.slot] == next) {
        st.sigma_app[hop.slot] += st.sigma_app[cur];
        st.preds[hop.slot].push_back(cur);
        if (next == st.dist_v[hop.w]) st.sigma_v[hop.w] += st.sigma_app[cur];
      }
      // Every reachable appearance is scanned here, so t_min ends up as the
      // earliest arrival over all temporal paths, not only shortest ones.
      if (st.t_min[hop.w] == -1 || hop.t < st.t_min[hop.w]) st.t_min[hop.w] = hop.t;
    }
  }
  st.index = std::move(index);
  return st;
}

template <class Num>
SourceState<Num> single_source_shortest(const TemporalGraph& g, VertexId s, bool strict) {
  return single_source_shortest<Num>(std::make_shared<const AppearanceIndex>(g), g, s, strict);
}

namespace {

// Seed terms: the pair (s, w) itself contributes sigma(w, t') / sigma(w) when
// (w, t') ends a shortest path, and 1 when t' is the foremost arrival at w
// (all shortest-foremost paths to w arrive at t_min[w]).
template <class Num>
Num shortest_seed(const SourceState<Num>& st, AppearanceIndex::Slot slot) {
  const VertexId w = st.index->appearance(slot).v;
  return st.dist_app[slot] == st.dist_v[w] ? Num(st.sigma_app[slot] / st.sigma_v[w]) : Num(0);
}

template <class Num>
Num foremost_seed(const SourceState<Num>& st, AppearanceIndex::Slot slot) {
  const auto a = st.index->appearance(slot);
  return a.t == st.t_min[a.v] ? Num(1) : Num(0);
}

}  // namespace

template <class Num>
Dependencies<Num> accumulate_dependencies(const SourceState<Num>& st) {
  Dependencies<Num> dep;
  dep.shortest.assign(st.index->size(), Num(0));
  dep.shortest_foremost.assign(st.index->size(), Num(0));
  for (auto it = st.visit_order.rbegin(); it != st.visit_order.rend(); ++it) {
    const auto slot = *it;
    dep.shortest[slot] += shortest_seed(st, slot);
    dep.shortest_foremost[slot] += foremost_seed(st, slot);
    for (const auto p : st.preds[slot]) {
      const Num ratio = st.sigma_app[p] / st.sigma_app[slot];
      dep.shortest[p] += ratio * dep.shortest[slot];
      dep.shortest_foremost[p] += ratio * dep.shortest_foremost[slot];
    }
  }
  return dep;
}

template <class Num>
ShortestBetweenness<Num> betweenness_shortest(const TemporalGraph& g, bool strict, EngineOptions options) {
  const std::size_t n = g.num_vertices();
  const auto index = std::make_shared<const AppearanceIndex>(g);
  const unsigned workers = detail::worker_count(n, options.threads);
  std::vector<std::vector<Num>> sh(workers, std::vector<Num>(n, Num(0)));
  std::vector<std::vector<Num>> fm(workers, std::vector<Num>(n, Num(0)));

  detail::for_each_source(n, options.threads, [&](unsigned w, VertexId s) {
    const auto st = single_source_shortest<Num>(index, g, s, strict);
    const auto dep = accumulate_dependencies(st);
    // Each visited appearance passes its dependency minus its own seed term
    // to its vertex; this is the sum of the predecessor updates of the
    // backward sweep.
    for (const auto slot : st.visit_order) {
      const VertexId v = index->appearance(slot).v;
      sh[w][v] += dep.shortest[slot] - shortest_seed(st, slot);
      fm[w][v] += dep.shortest_foremost[slot] - foremost_seed(st, slot);
    }
    const Num correction = Num(1) - Num(static_cast<long>(st.reachable_count()));
    sh[w][s] += correction;
    fm[w][s] += correction;
  });

  ShortestBetweenness<Num> out;
  out.shortest = {{Criterion::kShortest, strict}, detail::reduce(sh)};
  out.shortest_foremost = {{Criterion::kShortestForemost, strict}, detail::reduce(fm)};
  return out;
}

template <class Num>
std::pair<AppearanceBetweenness<Num>, AppearanceBetweenness<Num>> appearance_betweenness_shortest(
    const TemporalGraph& g, bool strict) {
  const auto index = std::make_shared<const AppearanceIndex>(g);
  std::vector<Num> sh(index->size(), Num(0));
  std::vector<Num> fm(index->size(), Num(0));
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    const auto st = single_source_shortest<Num>(index, g, s, strict);
    const auto dep = accumulate_dependencies(st);
    for (const auto slot : st.visit_order) {
      sh[slot] += dep.shortest[slot];
      fm[slot] += dep.shortest_foremost[slot];
    }
  }
  std::pair<AppearanceBetweenness<Num>, AppearanceBetweenness<Num>> out;
  for (std::size_t slot = 0; slot < index->size(); ++slot) {
    const auto a = index->appearance(static_cast<AppearanceIndex::Slot>(slot));
    out.first.emplace(a, sh[slot]);
    out.second.emplace(a, fm[slot]);
  }
  return out;
}

template <class Num>
std::vector<Num> appearance_to_vertex_scores(const AppearanceBetweenness<Num>& scores, const ConnectivityMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Num> out(n, Num(0));
  for (const auto& [app, value] : scores) {
    if (app.v >= n) {
      throw DomainError("appearance of vertex " + std::to_string(app.v) + " outside a " + std::to_string(n) +
                        "-vertex connectivity matrix");
    }
    out[app.v] += value;
  }
  for (VertexId v = 0; v < n; ++v) {
    out[v] -= Num(static_cast<long>(a.out_count(v) + a.in_count(v)));
    out[v] += Num(1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strict prefix-foremost

namespace {

struct QueuedTransition {
  Time t;
  std::uint64_t seq;  // insertion order breaks ties on t
  VertexId from;
  VertexId to;

  bool operator>(const QueuedTransition& o) const { return std::tie(t, seq) > std::tie(o.t, o.seq); }
};

}  // namespace

template <class Num>
PrefixForemostState<Num> single_source_prefix_foremost(const TemporalGraph& g, VertexId s) {
  const std::size_t n = g.num_vertices();
  if (s >= n) throw DomainError("unknown source vertex " + std::to_string(s));
  PrefixForemostState<Num> st;
  st.source = s;
  st.t_min.assign(n, -1);
  st.sigma.assign(n, Num(0));
  st.preds.assign(n, {});
  st.t_min[s] = 0;
  st.sigma[s] = Num(1);

  std::priority_queue<QueuedTransition, std::vector<QueuedTransition>, std::greater<>> queue;
  std::uint64_t seq = 0;
  auto enqueue_after = [&](VertexId v, Time t) {
    const auto nbs = g.neighborhood(v);
    auto it = std::upper_bound(nbs.begin(), nbs.end(), t, [](Time x, const Neighbor& nb) { return x < nb.t; });
    for (; it != nbs.end(); ++it) queue.push({it->t, seq++, v, it->u});
  };
  enqueue_after(s, 0);

  while (!queue.empty()) {
    const QueuedTransition tr = queue.top();
    queue.pop();
    if (st.t_min[tr.to] == -1) {
      st.t_min[tr.to] = tr.t;
      st.visit_order.push_back(tr.to);
      enqueue_after(tr.to, tr.t);
    }
    if (st.t_min[tr.to] == tr.t) {
      st.sigma[tr.to] += st.sigma[tr.from];
      st.preds[tr.to].push_back(tr.from);
    }
  }
  return st;
}

template <class Num>
BasicBetweenness<Num> betweenness_prefix_foremost(const TemporalGraph& g, EngineOptions options) {
  const std::size_t n = g.num_vertices();
  const unsigned workers = detail::worker_count(n, options.threads);
  std::vector<std::vector<Num>> acc(workers, std::vector<Num>(n, Num(0)));

  detail::for_each_source(n, options.threads, [&](unsigned w, VertexId s) {
    const auto st = single_source_prefix_foremost<Num>(g, s);
    auto& c = acc[w];
    // The reachable count includes s; with the loop below adding
    // |reachable| - 1 to s this nets to zero, as the conversion requires.
    c[s] += Num(1) - Num(static_cast<long>(st.reachable_count()));
    std::vector<Num> delta(n, Num(1));
    for (auto it = st.visit_order.rbegin(); it != st.visit_order.rend(); ++it) {
      const VertexId target = *it;
      for (const VertexId v : st.preds[target]) {
        const Num part = st.sigma[v] / st.sigma[target] * delta[target];
        delta[v] += part;
        c[v] += part;
      }
    }
  });
  return {{Criterion::kPrefixForemost, true}, detail::reduce(acc)};
}

template <class Num>
BasicBetweenness<Num> betweenness(const TemporalGraph& g, const Variant& variant, EngineOptions options) {
  validate(variant);
  switch (variant.criterion) {
    case Criterion::kShortest:
      return betweenness_shortest<Num>(g, variant.strict, options).shortest;
    case Criterion::kShortestForemost:
      return betweenness_shortest<Num>(g, variant.strict, options).shortest_foremost;
    case Criterion::kPrefixForemost:
      return betweenness_prefix_foremost<Num>(g, options);
    case Criterion::kForemost:
    case Criterion::kFastest:
      break;
  }
  throw ConfigError("no polynomial-time engine for " + variant_name(variant));
}

#define TEMPO_BTW_INSTANTIATE(Num)                                                                              \
  template struct SourceState<Num>;                                                                            \
  template struct PrefixForemostState<Num>;                                                                    \
  template SourceState<Num> single_source_shortest<Num>(const TemporalGraph&, VertexId, bool);                 \
  template SourceState<Num> single_source_shortest<Num>(std::shared_ptr<const AppearanceIndex>,                 \
                                                        const TemporalGraph&, VertexId, bool);                 \
  template Dependencies<Num> accumulate_dependencies<Num>(const SourceState<Num>&);                            \
  template ShortestBetweenness<Num> betweenness_shortest<Num>(const TemporalGraph&, bool, EngineOptions);      \
  template std::pair<AppearanceBetweenness<Num>, AppearanceBetweenness<Num>>                                   \
  appearance_betweenness_shortest<Num>(const TemporalGraph&, bool);                                            \
  template std::vector<Num> appearance_to_vertex_scores<Num>(const AppearanceBetweenness<Num>&,                \
                                                             const ConnectivityMatrix&);                      \
  template PrefixForemostState<Num> single_source_prefix_foremost<Num>(const TemporalGraph&, VertexId);        \
  template BasicBetweenness<Num> betweenness_prefix_foremost<Num>(const TemporalGraph&, EngineOptions);       \
  template BasicBetweenness<Num> betweenness<Num>(const TemporalGraph&, const Variant&, EngineOptions);

TEMPO_BTW_INSTANTIATE(double)
TEMPO_BTW_INSTANTIATE(Rational)

#undef TEMPO_BTW_INSTANTIATE

}  // namespace tempo_btw
