#include <doctest.h>

#include <set>
#include <tuple>

#include "tempo_btw/errors.hpp"
#include "tempo_btw/gadgets.hpp"
#include "tempo_btw/oracle.hpp"
#include "tempo_btw/random_graph.hpp"

using namespace tempo_btw;

namespace {

std::set<std::tuple<std::string, std::string, Time>> labelled_edges(const TemporalGraph& g) {
  std::set<std::tuple<std::string, std::string, Time>> out;
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u), b = g.label(e.v);
    if (b < a) std::swap(a, b);
    out.emplace(a, b, e.t);
  }
  return out;
}

std::size_t strict_paths(const MatchingGadget& m) {
  return enumerate_paths(m.graph, m.source, m.target, true).size();
}

BipartiteGraph complete(std::size_t a, std::size_t b) {
  BipartiteGraph g{a, b, {}};
  for (std::uint32_t i = 0; i < a; ++i) {
    for (std::uint32_t j = 0; j < b; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

}  // namespace

TEST_CASE("matching gadget construction") {
  const BipartiteGraph b{3, 3, {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}}};
  const auto m = matching_gadget(b);
  CHECK(m.graph.lifetime() == 7);
  const std::set<std::tuple<std::string, std::string, Time>> expected{
      {"a'", "a1", 1}, {"a'", "a2", 3}, {"a'", "a3", 5},                       // connectors
      {"a1", "b1", 2}, {"a1", "b2", 2}, {"a2", "b2", 4}, {"a3", "b2", 6}, {"a3", "b3", 6},  // forward
      {"a2", "b1", 3}, {"a2", "b2", 3}, {"a2", "b3", 3},                       // back
      {"a3", "b1", 5}, {"a3", "b2", 5}, {"a3", "b3", 5},
      {"b'", "b1", 7}, {"b'", "b2", 7}, {"b'", "b3", 7},
  };
  CHECK(labelled_edges(m.graph) == expected);
  CHECK(m.graph.label(m.source) == "a'");
  CHECK(m.graph.label(m.target) == "b'");

  // The matching {a1 b2, a3 b3} as a strict path.
  const auto id = [&](const char* l) { return *m.graph.find(l); };
  const TemporalPath p{{{id("a'"), id("a1"), 1},
                        {id("a1"), id("b2"), 2},
                        {id("b2"), id("a3"), 5},
                        {id("a3"), id("b3"), 6},
                        {id("b3"), id("b'"), 7}}};
  CHECK(is_temporal_path(m.graph, p, true));
  CHECK(strict_paths(m) + 1 == count_matchings(b));
}

TEST_CASE("matching counts") {
  CHECK(count_matchings({0, 0, {}}) == 1);
  CHECK(count_matchings({1, 1, {{0, 0}}}) == 2);
  CHECK(count_matchings(complete(2, 2)) == 7);
  CHECK(count_matchings(complete(3, 3)) == 34);
  CHECK(count_matchings({2, 2, {{0, 0}, {0, 0}}}) == 2);
  CHECK_THROWS_AS(count_matchings({9, 8, {}}), DomainError);
  CHECK_THROWS_AS(count_matchings({1, 1, {{0, 3}}}), DomainError);
}

TEST_CASE("matching gadget path counts") {
  CHECK(strict_paths(matching_gadget({2, 2, {}})) == 0);
  CHECK(strict_paths(matching_gadget({0, 0, {}})) == 0);
  CHECK(strict_paths(matching_gadget(complete(2, 2))) == 6);
  Rng rng(61);
  for (int k = 0; k < 30; ++k) {
    BipartiteGraph b{static_cast<std::size_t>(rng.between(1, 4)), static_cast<std::size_t>(rng.between(1, 4)), {}};
    for (std::uint32_t i = 0; i < b.left; ++i) {
      for (std::uint32_t j = 0; j < b.right; ++j) {
        if (rng.bernoulli(0.5)) b.edges.emplace_back(i, j);
      }
    }
    CHECK(BigInt(strict_paths(matching_gadget(b))) == count_matchings(b) - 1);
  }
}

TEST_CASE("betweenness gadget construction") {
  const auto g = TemporalGraph::build(3, {{0, 1, 1}, {1, 2, 2}}, {"a", "x", "b"});
  const auto gg = betweenness_gadget(g, 0, 2);
  CHECK(gg.graph.num_vertices() == 6);
  CHECK(gg.graph.lifetime() == 4);
  const std::set<std::tuple<std::string, std::string, Time>> expected{
      {"a", "x", 2}, {"b", "x", 3}, {"a", "a'", 1}, {"a'", "v'", 1}, {"b'", "v'", 4}, {"b", "b'", 4}};
  CHECK(labelled_edges(gg.graph) == expected);
  CHECK(gg.graph.label(gg.v_prime) == "v'");
  CHECK_THROWS_AS(betweenness_gadget(g, 0, 9), DomainError);

  const auto clash = TemporalGraph::build(2, {{0, 1, 1}}, {"a'", "b"});
  CHECK(betweenness_gadget(clash, 0, 1).graph.label(2) == "a''");
}

TEST_CASE("betweenness of v' on a single edge") {
  const auto g = TemporalGraph::build(2, {{0, 1, 1}}, {"a", "b"});
  const auto gg = betweenness_gadget(g, 0, 1);
  // One a-b path. Strict: only (a', b') routes through v', with 2 foremost
  // paths. Non-strict: (a, b') as well.
  const auto strict = exact_betweenness(gg.graph, {Criterion::kForemost, true}).scores[gg.v_prime];
  const auto loose = exact_betweenness(gg.graph, {Criterion::kForemost, false}).scores[gg.v_prime];
  CHECK(strict == Rational(1, 2));
  CHECK(loose == 1);
  CHECK(recover_path_count(strict, true) == 1);
  CHECK(recover_path_count(loose, false) == 1);
  CHECK(recover_path_count_four_pairs(strict) == 7);
  CHECK(recover_path_count_four_pairs(loose) == 3);
}

TEST_CASE("betweenness of v' without an a-b path") {
  const auto g = TemporalGraph::build(3, {{1, 2, 1}}, {"a", "b", "c"});
  const auto gg = betweenness_gadget(g, 0, 1);
  const auto strict = exact_betweenness(gg.graph, {Criterion::kForemost, true}).scores[gg.v_prime];
  const auto loose = exact_betweenness(gg.graph, {Criterion::kForemost, false}).scores[gg.v_prime];
  CHECK(strict == 1);
  CHECK(loose == 4);
  CHECK(recover_path_count(strict, true) == 0);
  CHECK(recover_path_count(loose, false) == 0);
  CHECK(recover_path_count_four_pairs(loose) == 0);
  CHECK_THROWS_AS(recover_path_count(Rational(0), true), DomainError);
}

TEST_CASE("path count recovered from v'") {
  Rng rng(62);
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.between(2, 5));
    const auto g = random_temporal_graph(n, static_cast<Time>(rng.between(1, 4)), 0.4, rng);
    for (bool strict : {true, false}) {
      const auto gg = betweenness_gadget(g, 0, 1);
      const auto c = exact_betweenness(gg.graph, {Criterion::kForemost, strict}).scores[gg.v_prime];
      const auto p = enumerate_paths(g, 0, 1, strict).size();
      CHECK(recover_path_count(c, strict) == Rational(p));
    }
  }
}

TEST_CASE("sample graphs") {
  const auto g = three_paths_graph();
  CHECK(g.num_vertices() == 8);
  CHECK(g.num_edges() == 9);
  CHECK(g.lifetime() == 5);
  const auto w = walk_artifact_graph(2, 3, 4);
  CHECK(w.graph.num_vertices() == 8);
  CHECK(w.graph.num_edges() == 2 * 2 + 2 * 3 + 4);
  CHECK(w.left.size() == 2);
  CHECK(w.right.size() == 3);
  CHECK_THROWS_AS(walk_artifact_graph(1, 1, 0), DomainError);
}
