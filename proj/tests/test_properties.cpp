#include <doctest.h>

#include "invariants.hpp"
#include "support.hpp"
#include "tempo_btw/brandes.hpp"
#include "tempo_btw/gadgets.hpp"
#include "tempo_btw/oracle.hpp"
#include "tempo_btw/random_graph.hpp"

using namespace tempo_btw;

namespace {

std::vector<TemporalGraph> corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<TemporalGraph> out{three_paths_graph()};
  for (int k = 0; k < count; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.between(2, 7));
    const Time T = static_cast<Time>(rng.between(1, 5));
    out.push_back(random_temporal_graph(n, T, 0.2 + 0.3 * rng.uniform(), rng));
  }
  return out;
}

// Keeps edges greedily so that no vertex sees the same label twice.
TemporalGraph distinct_labels(const TemporalGraph& g) {
  std::vector<std::vector<char>> used(g.num_vertices(), std::vector<char>(g.lifetime() + 1, 0));
  std::vector<TimeEdge> kept;
  for (const auto& e : g.edges()) {
    if (used[e.u][e.t] || used[e.v][e.t]) continue;
    used[e.u][e.t] = used[e.v][e.t] = 1;
    kept.push_back(e);
  }
  return TemporalGraph::build(g.num_vertices(), kept);
}

}  // namespace

TEST_CASE("predecessor structure, counts and prefix optimality") {
  for (const auto& g : corpus(81, 60)) {
    for (bool strict : {true, false}) {
      for (VertexId s = 0; s < g.num_vertices(); ++s) {
        const auto msg = test_support::check_source(g, s, strict);
        CHECK_MESSAGE(msg.empty(), msg);
      }
    }
  }
}

TEST_CASE("prefixes of t-shortest paths can be longer than necessary") {
  // The only path to (v, 4) is s y w x v, but s v x reaches (x, 3) sooner.
  const auto g = TemporalGraph::build(
      5, {{0, 1, 1}, {1, 2, 3}, {0, 3, 1}, {3, 4, 2}, {4, 2, 3}, {2, 1, 4}}, {"s", "v", "x", "y", "w"});
  const auto d = appearance_distances(g, 0, true);
  CHECK(d.at({1, 4}) == 4);
  CHECK(d.at({2, 3}) == 2);
  CHECK(test_support::check_prefix_optimality(g, 0, true, true) == "prefix not t-shortest at (x,3) on a path to (v,4)");
  CHECK(test_support::check_prefix_optimality(g, 0, true).empty());
  // The engine reaches (v, 4) by the walk s v x v, as a dead end.
  const auto st = single_source_shortest<Rational>(g, 0, true);
  CHECK(st.dist({1, 4}) == 3);
  const auto dep = accumulate_dependencies(st);
  CHECK(dep.shortest[st.index->find(1, 4)] == 0);
  CHECK(dep.shortest_foremost[st.index->find(1, 4)] == 0);
}

TEST_CASE("engine equals oracle") {
  for (const auto& g : corpus(82, 60)) {
    for (const auto& v : kPolynomialVariants) {
      const auto oracle = exact_betweenness(g, v).scores;
      CHECK(betweenness<Rational>(g, v).scores == oracle);
      CHECK(test_support::max_abs_diff(betweenness<double>(g, v).scores, oracle) < 1e-9);
    }
  }
}

TEST_CASE("scores are bounded") {
  for (const auto& g : corpus(83, 60)) {
    const Rational n(static_cast<long>(g.num_vertices()));
    const Rational bound = g.num_vertices() < 2 ? Rational(0) : (n - 1) * (n - 2);
    for (const auto& v : kPolynomialVariants) {
      for (const auto& c : betweenness<Rational>(g, v).scores) {
        CHECK(c >= 0);
        CHECK(c <= bound);
      }
    }
  }
}

TEST_CASE("strictness is irrelevant without repeated labels at a vertex") {
  for (const auto& g0 : corpus(84, 60)) {
    const auto g = distinct_labels(g0);
    const auto st = reachability_matrix(g, true);
    const auto ns = reachability_matrix(g, false);
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
      for (VertexId z = 0; z < g.num_vertices(); ++z) CHECK(st(s, z) == ns(s, z));
    }
    for (const auto c : {Criterion::kShortest, Criterion::kShortestForemost}) {
      CHECK(betweenness<Rational>(g, {c, true}).scores == betweenness<Rational>(g, {c, false}).scores);
    }
  }
}
