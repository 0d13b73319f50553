#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tempo_btw/graph.hpp"

namespace tempo_btw {

enum class EdgeFormat {
  kUVT,  ///< `u v t` per line
  kTUV,  ///< `t u v` per line
};

struct ParseOptions {
  /// Collapse repeated (u,v,t) triples. When false, a repeat is a ValueError.
  bool dedupe = true;
  /// Relabel timestamps to 1..T preserving order; raw values are kept in
  /// TemporalGraph::raw_times(). When false, timestamps are used as labels and
  /// must be >= 1.
  bool normalize = true;
};

struct ParseResult {
  TemporalGraph graph;
  std::size_t duplicates_removed = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t lines_read = 0;
};

/// Reads a whitespace-delimited edge list. `#` starts a comment line. Vertex
/// labels are mapped to dense ids in order of first appearance.
ParseResult parse_edge_list(std::istream& in, EdgeFormat format = EdgeFormat::kUVT,
                            ParseOptions options = {});
ParseResult parse_edge_list_file(const std::string& path, EdgeFormat format = EdgeFormat::kUVT,
                                 ParseOptions options = {});

/// Writes `u v t` lines using vertex labels. Raw timestamps are written when
/// the graph carries them, so parse(write(g)) reproduces g.
void write_edge_list(std::ostream& out, const TemporalGraph& g);

/// Formats a score the way every CSV emitted by the toolkit does: 12
/// significant digits, `.` decimal separator.
std::string format_score(double x);

/// CSV with header `vertex,score`, one row per vertex sorted by label.
void serialize_scores(std::ostream& out, std::span<const double> scores,
                      const std::vector<std::string>& labels);

/// Inverse of serialize_scores; rows come back in file order.
std::vector<std::pair<std::string, double>> parse_scores(std::istream& in);

}  // namespace tempo_btw
