#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tempo_btw/analysis.hpp"
#include "tempo_btw/brandes.hpp"
#include "tempo_btw/errors.hpp"
#include "tempo_btw/expansion.hpp"
#include "tempo_btw/gadgets.hpp"
#include "tempo_btw/io.hpp"
#include "tempo_btw/oracle.hpp"
#include "tempo_btw/random_graph.hpp"

using namespace tempo_btw;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerification = 3;
constexpr double kTolerance = 1e-9;

enum class Engine { kTemporal, kExpansion, kOracle };

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "uvt";
  std::vector<std::string> variant_tokens;
  bool strict = false;
  bool nonstrict = false;
  std::string engine = "temporal";
  bool exact = false;
  unsigned threads = 1;
  std::optional<std::size_t> max_paths;
  std::string output;
  std::string stats;
  std::size_t top_k = 10;
  std::size_t buckets = 10;
  bool nonzero_only = false;
  std::uint64_t seed = 1;
  std::size_t random_graphs = 0;
  bool corrupt_engine = false;

  Engine engine_kind() const {
    if (engine == "expansion") return Engine::kExpansion;
    if (engine == "oracle") return Engine::kOracle;
    return Engine::kTemporal;
  }

  OracleLimits limits() const {
    auto l = OracleLimits::from_env(OracleLimits{});
    if (max_paths) l.max_paths = *max_paths;
    return l;
  }

  // Variants in request order. Without --variant: the five polynomial
  // variants, filtered by an explicit strictness and by what the engine
  // supports.
  std::vector<Variant> variants() const {
    if (strict && nonstrict) throw ConfigError("--strict and --nonstrict are exclusive");
    std::vector<Variant> out;
    if (variant_tokens.empty()) {
      for (const auto& v : kPolynomialVariants) {
        if ((strict && !v.strict) || (nonstrict && v.strict)) continue;
        if (engine_kind() == Engine::kExpansion && v.criterion == Criterion::kPrefixForemost) continue;
        out.push_back(v);
      }
    } else {
      for (const auto& t : variant_tokens) out.push_back(parse_variant(t, !nonstrict));
    }
    for (const auto& v : out) {
      validate(v);
      const bool polynomial = v.criterion != Criterion::kForemost && v.criterion != Criterion::kFastest;
      if (engine_kind() != Engine::kOracle && !polynomial) {
        throw ConfigError(variant_name(v) + " needs --engine oracle");
      }
      if (engine_kind() == Engine::kExpansion && v.criterion == Criterion::kPrefixForemost) {
        throw ConfigError(variant_name(v) + " has no static expansion");
      }
    }
    return out;
  }
};

std::string rational_text(const Rational& x) {
  const auto den = boost::multiprecision::denominator(x);
  const auto num = boost::multiprecision::numerator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

struct Column {
  std::string name;
  std::vector<double> values;
  std::vector<std::string> text;
  double seconds = 0.0;
};

template <class Num>
Column to_column(const Variant& v, const std::vector<Num>& scores, bool exact) {
  Column c{variant_name(v), {}, {}, 0.0};
  for (const auto& x : scores) {
    c.values.push_back(static_cast<double>(x));
    if constexpr (std::is_same_v<Num, Rational>) {
      c.text.push_back(exact ? rational_text(x) : format_score(static_cast<double>(x)));
    } else {
      c.text.push_back(format_score(x));
    }
  }
  return c;
}

Column compute_variant(const TemporalGraph& g, const Variant& v, const RunConfig& cfg) {
  const EngineOptions opts{cfg.threads};
  const auto start = std::chrono::steady_clock::now();
  Column c;
  switch (cfg.engine_kind()) {
    case Engine::kTemporal:
      c = cfg.exact ? to_column(v, betweenness<Rational>(g, v, opts).scores, true)
                    : to_column(v, betweenness<double>(g, v, opts).scores, false);
      break;
    case Engine::kExpansion:
      c = cfg.exact ? to_column(v, betweenness_via_expansion<Rational>(g, v, opts).scores, true)
                    : to_column(v, betweenness_via_expansion<double>(g, v, opts).scores, false);
      break;
    case Engine::kOracle:
      c = to_column(v, exact_betweenness(g, v, cfg.limits()).scores, cfg.exact);
      break;
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

TemporalGraph load(const std::string& path, const RunConfig& cfg) {
  const auto format = cfg.format == "tuv" ? EdgeFormat::kTUV : EdgeFormat::kUVT;
  if (path == "-") return parse_edge_list(std::cin, format).graph;
  return parse_edge_list_file(path, format).graph;
}

// Output stream: --output file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ValueError("cannot write '" + path + "'");
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void report_times(const RunConfig& cfg, const std::string& dataset, const std::vector<Column>& cols) {
  if (!cfg.stats.empty()) {
    std::ofstream out(cfg.stats, std::ios::app);
    if (!out) throw ValueError("cannot write '" + cfg.stats + "'");
    for (const auto& c : cols) out << dataset << ',' << c.name << ',' << cfg.engine << ',' << c.seconds << '\n';
    return;
  }
  for (const auto& c : cols) {
    std::fprintf(stderr, "time %s %s %s %.6f s\n", dataset.c_str(), c.name.c_str(), cfg.engine.c_str(), c.seconds);
  }
}

std::vector<VertexId> by_label(const TemporalGraph& g) {
  std::vector<VertexId> ids(g.num_vertices());
  for (VertexId v = 0; v < ids.size(); ++v) ids[v] = v;
  std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
  return ids;
}

std::string dataset_name(const std::string& path) {
  return path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
}

std::vector<Column> compute_all(const TemporalGraph& g, const std::vector<Variant>& variants, const RunConfig& cfg,
                                const std::string& dataset) {
  std::vector<Column> cols;
  for (const auto& v : variants) cols.push_back(compute_variant(g, v, cfg));
  report_times(cfg, dataset, cols);
  return cols;
}

int cmd_compute(const RunConfig& cfg) {
  const auto variants = cfg.variants();
  const auto g = load(cfg.inputs.at(0), cfg);
  const auto cols = compute_all(g, variants, cfg, dataset_name(cfg.inputs[0]));
  Sink sink(cfg.output);
  auto& out = sink.get();
  out << "vertex";
  for (const auto& c : cols) out << ',' << c.name;
  out << '\n';
  for (const auto v : by_label(g)) {
    out << g.label(v);
    for (const auto& c : cols) out << ',' << c.text[v];
    out << '\n';
  }
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  const auto variants = cfg.variants();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < variants.size(); ++i) {
    for (std::size_t j = i + 1; j < variants.size(); ++j) pairs.emplace_back(i, j);
  }
  Sink sink(cfg.output);
  auto& out = sink.get();
  out << "dataset,metric";
  for (const auto& [i, j] : pairs) out << ',' << variant_name(variants[i]) << ':' << variant_name(variants[j]);
  out << '\n';
  for (const auto& path : cfg.inputs) {
    const auto g = load(path, cfg);
    const auto dataset = dataset_name(path);
    const auto cols = compute_all(g, variants, cfg, dataset);
    std::vector<Ranking> ranks;
    for (const auto& c : cols) ranks.push_back(Ranking::from_scores(c.values, g.labels()));
    const std::size_t k = std::min(cfg.top_k, g.num_vertices());
    std::ostringstream tau, ties, top;
    tau << dataset << ",tau";
    ties << dataset << ",tie_fraction";
    top << dataset << ",top" << cfg.top_k;
    for (const auto& [i, j] : pairs) {
      const auto r = kendall_tau(ranks[i], ranks[j], {.nonzero_only = cfg.nonzero_only});
      tau << ',' << format_score(r.tau);
      ties << ',' << format_score(r.tie_fraction());
      top << ',' << top_k_intersection(ranks[i], ranks[j], k);
    }
    out << tau.str() << '\n' << ties.str() << '\n' << top.str() << '\n';
  }
  return 0;
}

int cmd_histogram(const RunConfig& cfg) {
  const auto variants = cfg.variants();
  const auto g = load(cfg.inputs.at(0), cfg);
  const auto cols = compute_all(g, variants, cfg, dataset_name(cfg.inputs[0]));
  Sink sink(cfg.output);
  auto& out = sink.get();
  out << "variant,bucket,lower,upper,count\n";
  for (const auto& c : cols) {
    const auto counts = histogram(c.values, cfg.buckets);
    const double max = c.values.empty() ? 0.0 : *std::max_element(c.values.begin(), c.values.end());
    for (std::size_t b = 0; b < counts.size(); ++b) {
      out << c.name << ',' << b << ',' << format_score(max * b / cfg.buckets) << ','
          << format_score(max * (b + 1) / cfg.buckets) << ',' << counts[b] << '\n';
    }
  }
  return 0;
}

int cmd_oracle_check(const RunConfig& cfg) {
  if (cfg.engine_kind() == Engine::kOracle) throw ConfigError("oracle-check compares an engine against the oracle");
  const auto variants = cfg.variants();
  const auto limits = cfg.limits();
  std::vector<std::pair<std::string, TemporalGraph>> graphs;
  for (const auto& path : cfg.inputs) graphs.emplace_back(dataset_name(path), load(path, cfg));
  Rng rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.random_graphs; ++k) {
    const auto n = static_cast<std::size_t>(rng.between(2, 7));
    const auto T = static_cast<Time>(rng.between(1, 5));
    graphs.emplace_back("random" + std::to_string(k), random_temporal_graph(n, T, 0.2 + 0.3 * rng.uniform(), rng));
  }
  if (graphs.empty()) throw ConfigError("oracle-check needs an input file or --random N");

  Sink sink(cfg.output);
  auto& out = sink.get();
  out << "graph,variant,max_deviation,result\n";
  double worst = 0.0;
  std::size_t runs = 0;
  for (const auto& [name, g] : graphs) {
    for (const auto& v : variants) {
      auto engine = compute_variant(g, v, cfg).values;
      if (cfg.corrupt_engine && !engine.empty()) engine[0] += 1e-6;
      const auto oracle = exact_betweenness(g, v, limits).scores;
      double dev = 0.0;
      for (std::size_t i = 0; i < engine.size(); ++i) {
        dev = std::max(dev, std::abs(engine[i] - static_cast<double>(oracle[i])));
      }
      worst = std::max(worst, dev);
      ++runs;
      out << name << ',' << variant_name(v) << ',' << format_score(dev) << ',' << (dev <= kTolerance ? "pass" : "fail")
          << '\n';
    }
  }
  const bool pass = worst <= kTolerance;
  std::fprintf(stderr, "oracle-check: %zu runs, max deviation %g, %s\n", runs, worst, pass ? "PASS" : "FAIL");
  return pass ? 0 : kExitVerification;
}

struct GadgetConfig {
  std::string kind;
  std::size_t left = 3;
  std::size_t right = 3;
  std::vector<std::string> edges;
  bool random = false;
  double density = 0.5;
  std::string a;
  std::string b;
};

BipartiteGraph bipartite_from(const GadgetConfig& gc, std::uint64_t seed) {
  BipartiteGraph bg{gc.left, gc.right, {}};
  if (gc.random) {
    Rng rng(seed);
    for (std::uint32_t i = 0; i < gc.left; ++i) {
      for (std::uint32_t j = 0; j < gc.right; ++j) {
        if (rng.bernoulli(gc.density)) bg.edges.emplace_back(i, j);
      }
    }
    return bg;
  }
  for (const auto& e : gc.edges) {
    const auto colon = e.find(':');
    if (colon == std::string::npos) throw ConfigError("--edge expects I:J, got '" + e + "'");
    try {
      bg.edges.emplace_back(std::stoul(e.substr(0, colon)), std::stoul(e.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw ConfigError("--edge expects I:J, got '" + e + "'");
    }
  }
  return bg;
}

int cmd_gadget(const RunConfig& cfg, const GadgetConfig& gc) {
  Sink sink(cfg.output);
  auto& out = sink.get();
  if (gc.kind == "matching") {
    const auto bg = bipartite_from(gc, cfg.seed);
    const auto m = matching_gadget(bg);
    const BigInt matchings = count_matchings(bg);
    const BigInt paths = enumerate_paths(m.graph, m.source, m.target, true, cfg.limits()).size();
    const bool holds = paths == matchings - 1;
    out << "# matchings=" << matchings << " strict_paths=" << paths << " identity=" << (holds ? "holds" : "fails")
        << '\n';
    write_edge_list(out, m.graph);
    return holds ? 0 : kExitVerification;
  }

  if (cfg.inputs.empty()) throw ConfigError("gadget betweenness needs an input graph");
  const auto g = load(cfg.inputs[0], cfg);
  const auto a = g.find(gc.a), b = g.find(gc.b);
  if (!a || !b) throw DomainError("unknown vertex label for --a or --b");
  const auto gg = betweenness_gadget(g, *a, *b);
  bool holds = true;
  std::vector<bool> modes;
  if (!cfg.nonstrict) modes.push_back(true);
  if (!cfg.strict) modes.push_back(false);
  for (const bool strict : modes) {
    const Rational c = exact_betweenness(gg.graph, {Criterion::kForemost, strict}, cfg.limits()).scores[gg.v_prime];
    const Rational p(static_cast<long>(enumerate_paths(g, *a, *b, strict, cfg.limits()).size()));
    const Rational four = recover_path_count_four_pairs(c);
    out << "# " << (strict ? "strict" : "nonstrict") << ": paths=" << rational_text(p)
        << " C(v')=" << rational_text(c) << " four_pair_recovery=" << rational_text(four)
        << " corrected_recovery=" << rational_text(recover_path_count(c, strict)) << '\n';
    holds = holds && four == p;
  }
  write_edge_list(out, gg.graph);
  return holds ? 0 : kExitVerification;
}

void add_engine_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Edge-list column order")->check(CLI::IsMember({"uvt", "tuv"}));
  cmd->add_option("--variant", cfg.variant_tokens,
                  "Variant: sh, shfm, pfm (fm, fa with --engine oracle), optionally prefixed strict- or "
                  "nonstrict-. Repeatable");
  cmd->add_flag("--strict", cfg.strict, "Strict paths for unprefixed variants");
  cmd->add_flag("--nonstrict", cfg.nonstrict, "Non-strict paths for unprefixed variants");
  cmd->add_option("--engine", cfg.engine, "Engine")->check(CLI::IsMember({"temporal", "expansion", "oracle"}));
  cmd->add_flag("--exact", cfg.exact, "Rational arithmetic; scores printed as fractions");
  cmd->add_option("--threads", cfg.threads, "Worker threads over sources")->check(CLI::Range(1u, 1024u));
  cmd->add_option("--max-paths", cfg.max_paths, "Oracle cap on explored path prefixes");
  cmd->add_option("-o,--output", cfg.output, "Output file instead of stdout");
  cmd->add_option("--stats", cfg.stats, "Append per-variant timings as CSV instead of stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal betweenness centrality"};
  app.require_subcommand(1);
  RunConfig cfg;
  GadgetConfig gc;

  auto* compute = app.add_subcommand("compute", "Per-vertex scores, one column per variant");
  compute->add_option("input", cfg.inputs, "Edge list, - for stdin")->required()->expected(1);
  add_engine_options(compute, cfg);

  auto* compare = app.add_subcommand("compare", "Kendall tau, tie fraction and top-k overlap per variant pair");
  compare->add_option("inputs", cfg.inputs, "Edge lists, one result row group each")->required();
  add_engine_options(compare, cfg);
  compare->add_option("--top-k", cfg.top_k, "Prefix length for the overlap")->check(CLI::PositiveNumber);
  compare->add_flag("--nonzero-only", cfg.nonzero_only, "Tau over vertices nonzero in both rankings");

  auto* hist = app.add_subcommand("histogram", "Score histograms over equal-width buckets");
  hist->add_option("input", cfg.inputs, "Edge list, - for stdin")->required()->expected(1);
  add_engine_options(hist, cfg);
  hist->add_option("--buckets", cfg.buckets, "Number of buckets")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("oracle-check", "Compare an engine against exhaustive path enumeration");
  check->add_option("inputs", cfg.inputs, "Edge lists");
  add_engine_options(check, cfg);
  check->add_option("--random", cfg.random_graphs, "Also check N random graphs (n <= 7, T <= 5)");
  check->add_option("--seed", cfg.seed, "Seed for --random");
  check->add_flag("--corrupt-engine", cfg.corrupt_engine, "Perturb engine scores (negative control)")->group("");

  auto* gadget = app.add_subcommand("gadget", "Emit a reduction gadget as an edge list with its identity report");
  gadget->add_option("kind", gc.kind, "matching or betweenness")->required()->check(CLI::IsMember({"matching", "betweenness"}));
  gadget->add_option("input", cfg.inputs, "Edge list (betweenness gadget)");
  gadget->add_option("--format", cfg.format, "Edge-list column order")->check(CLI::IsMember({"uvt", "tuv"}));
  gadget->add_option("--left", gc.left, "Left part size (matching)");
  gadget->add_option("--right", gc.right, "Right part size (matching)");
  gadget->add_option("--edge", gc.edges, "Bipartite edge I:J, 0-based (matching). Repeatable");
  gadget->add_flag("--random", gc.random, "Random bipartite edges (matching)");
  gadget->add_option("--density", gc.density, "Edge probability for --random")->check(CLI::Range(0.0, 1.0));
  gadget->add_option("--seed", cfg.seed, "Seed for --random");
  gadget->add_option("--a", gc.a, "Source label (betweenness)");
  gadget->add_option("--b", gc.b, "Target label (betweenness)");
  gadget->add_flag("--strict", cfg.strict, "Only strict paths (betweenness)");
  gadget->add_flag("--nonstrict", cfg.nonstrict, "Only non-strict paths (betweenness)");
  gadget->add_option("--max-paths", cfg.max_paths, "Oracle cap on explored path prefixes");
  gadget->add_option("-o,--output", cfg.output, "Output file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*compare) return cmd_compare(cfg);
    if (*hist) return cmd_histogram(cfg);
    if (*check) return cmd_oracle_check(cfg);
    if (cfg.strict && cfg.nonstrict) throw ConfigError("--strict and --nonstrict are exclusive");
    return cmd_gadget(cfg, gc);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::fprintf(stderr, "error: %s (raise with --max-paths or TEMPO_BTW_LIMITS)\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
}
