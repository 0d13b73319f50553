#include "tempo_btw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tempo_btw/errors.hpp"

namespace tempo_btw {
namespace {

void check_same_vertices(const Ranking& a, const Ranking& b) {
  if (a.scores.size() != b.scores.size() || a.labels != b.labels) {
    throw DomainError("rankings are over different vertex sets");
  }
}

// -1, 0, +1 with near-equal values treated as equal.
int compare(double x, double y, double tolerance) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  if (std::abs(x - y) <= tolerance * scale) return 0;
  return x < y ? -1 : 1;
}

}  // namespace

Ranking Ranking::from_scores(std::vector<double> scores, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t v = 0; v < scores.size(); ++v) labels.push_back(std::to_string(v));
  }
  if (labels.size() != scores.size()) throw DomainError("one label per score required");
  Ranking r;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), VertexId{0});
  std::sort(r.order.begin(), r.order.end(), [&](VertexId x, VertexId y) {
    if (scores[x] != scores[y]) return scores[x] > scores[y];
    return labels[x] < labels[y];
  });
  r.scores = std::move(scores);
  r.labels = std::move(labels);
  return r;
}

TauResult kendall_tau(const Ranking& a, const Ranking& b, const TauOptions& options) {
  check_same_vertices(a, b);
  std::vector<VertexId> members;
  for (VertexId v = 0; v < a.scores.size(); ++v) {
    if (!options.nonzero_only || (a.scores[v] != 0.0 && b.scores[v] != 0.0)) members.push_back(v);
  }
  TauResult r;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const VertexId x = members[i];
      const VertexId y = members[j];
      const int ca = compare(a.scores[x], a.scores[y], options.tie_tolerance);
      const int cb = compare(b.scores[x], b.scores[y], options.tie_tolerance);
      ++r.pairs;
      if (ca == 0 || cb == 0) {
        ++r.tied;
      } else if (ca == cb) {
        ++r.concordant;
      } else {
        ++r.discordant;
      }
    }
  }
  r.tau = r.pairs == 0 ? std::numeric_limits<double>::quiet_NaN()
                       : (static_cast<double>(r.concordant) - static_cast<double>(r.discordant)) / r.pairs;
  return r;
}

std::size_t top_k_intersection(const Ranking& a, const Ranking& b, std::size_t k) {
  check_same_vertices(a, b);
  if (k > a.size()) throw DomainError("k exceeds the number of vertices");
  std::vector<char> in_a(a.size(), 0);
  for (std::size_t i = 0; i < k; ++i) in_a[a.order[i]] = 1;
  std::size_t common = 0;
  for (std::size_t i = 0; i < k; ++i) common += in_a[b.order[i]];
  return common;
}

std::vector<std::size_t> histogram(const std::vector<double>& scores, std::size_t buckets) {
  if (buckets == 0) throw DomainError("at least one bucket required");
  std::vector<std::size_t> counts(buckets, 0);
  double max = 0.0;
  for (const double s : scores) {
    if (!(s >= 0.0)) throw DomainError("scores must be non-negative");
    max = std::max(max, s);
  }
  for (const double s : scores) {
    std::size_t i = 0;
    if (max > 0.0) i = std::min(buckets - 1, static_cast<std::size_t>(std::floor(s * buckets / max)));
    ++counts[i];
  }
  return counts;
}

}  // namespace tempo_btw
