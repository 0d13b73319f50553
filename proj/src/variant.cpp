#include "tempo_btw/variant.hpp"

#include "tempo_btw/errors.hpp"

namespace tempo_btw {

void validate(const Variant& v) {
  if (v.criterion == Criterion::kPrefixForemost && !v.strict) {
    throw ConfigError("prefix-foremost betweenness is only defined here for strict paths");
  }
}

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kShortest: return "sh";
    case Criterion::kForemost: return "fm";
    case Criterion::kFastest: return "fa";
    case Criterion::kShortestForemost: return "shfm";
    case Criterion::kPrefixForemost: return "pfm";
  }
  return "?";
}

Criterion parse_criterion(std::string_view token) {
  for (Criterion c : {Criterion::kShortest, Criterion::kForemost, Criterion::kFastest,
                      Criterion::kShortestForemost, Criterion::kPrefixForemost}) {
    if (token == criterion_name(c)) return c;
  }
  throw ConfigError("unknown criterion '" + std::string(token) + "'");
}

std::string variant_name(const Variant& v) {
  return std::string(v.strict ? "strict-" : "nonstrict-") + std::string(criterion_name(v.criterion));
}

Variant parse_variant(std::string_view token, bool default_strict) {
  constexpr std::string_view kStrict = "strict-";
  constexpr std::string_view kNonStrict = "nonstrict-";
  if (token.starts_with(kStrict)) return {parse_criterion(token.substr(kStrict.size())), true};
  if (token.starts_with(kNonStrict)) return {parse_criterion(token.substr(kNonStrict.size())), false};
  return {parse_criterion(token), default_strict};
}

}  // namespace tempo_btw
