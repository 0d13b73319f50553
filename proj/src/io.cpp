#include "tempo_btw/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "tempo_btw/errors.hpp"

namespace tempo_btw {
namespace {

std::int64_t parse_timestamp(const std::string& token, std::size_t line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ValueError("line " + std::to_string(line) + ": timestamp out of range");
  if (ec != std::errc() || ptr != last) throw ParseError(line, "timestamp '" + token + "' is not an integer");
  if (value < 0) throw ValueError("line " + std::to_string(line) + ": negative timestamp " + token);
  return value;
}

struct RawEdge {
  VertexId u;
  VertexId v;
  std::int64_t t;
};

}  // namespace

ParseResult parse_edge_list(std::istream& in, EdgeFormat format, ParseOptions options) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) {
    const auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  ParseResult result;
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tokens[4];
    std::size_t count = 0;
    while (count < 4 && fields >> tokens[count]) ++count;
    if (count == 0 || tokens[0].front() == '#') continue;
    if (count != 3) throw ParseError(line_no, "expected 3 fields");
    const std::string& tu = format == EdgeFormat::kUVT ? tokens[0] : tokens[1];
    const std::string& tv = format == EdgeFormat::kUVT ? tokens[1] : tokens[2];
    const std::string& tt = format == EdgeFormat::kUVT ? tokens[2] : tokens[0];
    const std::int64_t t = parse_timestamp(tt, line_no);
    const VertexId u = intern(tu);
    const VertexId v = intern(tv);
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    raw.push_back({u, v, t});
  }
  result.lines_read = line_no;

  std::vector<std::int64_t> raw_times;
  std::vector<TimeEdge> edges;
  edges.reserve(raw.size());
  if (options.normalize) {
    raw_times.reserve(raw.size());
    for (const RawEdge& e : raw) raw_times.push_back(e.t);
    std::sort(raw_times.begin(), raw_times.end());
    raw_times.erase(std::unique(raw_times.begin(), raw_times.end()), raw_times.end());
    for (const RawEdge& e : raw) {
      const auto rank = std::lower_bound(raw_times.begin(), raw_times.end(), e.t) - raw_times.begin();
      edges.push_back({e.u, e.v, static_cast<Time>(rank + 1)});
    }
  } else {
    for (const RawEdge& e : raw) {
      if (e.t < 1 || e.t > std::numeric_limits<Time>::max()) {
        throw ValueError("timestamp " + std::to_string(e.t) +
                         " is not a valid label without normalization (labels must be >= 1)");
      }
      edges.push_back({e.u, e.v, static_cast<Time>(e.t)});
    }
  }

  TemporalGraph::BuildReport report;
  const std::size_t n = labels.size();
  result.graph = TemporalGraph::build(n, std::move(edges), std::move(labels), std::move(raw_times), &report);
  if (!options.dedupe && report.duplicates_removed > 0) {
    throw ValueError(std::to_string(report.duplicates_removed) + " duplicate time edge(s) with deduplication disabled");
  }
  result.duplicates_removed = report.duplicates_removed;
  return result;
}

ParseResult parse_edge_list_file(const std::string& path, EdgeFormat format, ParseOptions options) {
  std::ifstream in(path);
  if (!in) throw ValueError("cannot open '" + path + "'");
  return parse_edge_list(in, format, options);
}

void write_edge_list(std::ostream& out, const TemporalGraph& g) {
  for (const TimeEdge& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << g.raw_time(e.t) << '\n';
  }
}

std::string format_score(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void serialize_scores(std::ostream& out, std::span<const double> scores,
                      const std::vector<std::string>& labels) {
  if (scores.size() != labels.size()) throw DomainError("score and label counts differ");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  out << "vertex,score\n";
  for (std::size_t i : order) out << labels[i] << ',' << format_score(scores[i]) << '\n';
}

std::vector<std::pair<std::string, double>> parse_scores(std::istream& in) {
  std::vector<std::pair<std::string, double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line == "vertex,score") continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) throw ParseError(line_no, "expected 'label,score'");
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(line.substr(comma + 1), &used);
      if (used != line.size() - comma - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError(line_no, "score is not a number");
    }
    rows.emplace_back(line.substr(0, comma), value);
  }
  return rows;
}

}  // namespace tempo_btw
