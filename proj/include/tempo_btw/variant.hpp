#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tempo_btw {

/// Optimality criterion of temporal paths.
enum class Criterion {
  kShortest,          ///< fewest transitions
  kForemost,          ///< earliest arrival
  kFastest,           ///< smallest arrival minus departure
  kShortestForemost,  ///< foremost, then fewest transitions
  kPrefixForemost,    ///< foremost with every prefix foremost (strict only)
};

struct Variant {
  Criterion criterion = Criterion::kShortest;
  bool strict = true;

  bool operator==(const Variant&) const = default;
};

/// Throws ConfigError for combinations without a well-defined counting
/// problem in this toolkit (non-strict prefix-foremost).
void validate(const Variant& v);

std::string_view criterion_name(Criterion c);  ///< "sh", "fm", "fa", "shfm", "pfm"
Criterion parse_criterion(std::string_view token);

/// "strict-sh", "nonstrict-shfm", ...
std::string variant_name(const Variant& v);
/// Accepts "sh" (strictness taken from `default_strict`) or a prefixed
/// "strict-sh" / "nonstrict-sh".
Variant parse_variant(std::string_view token, bool default_strict = true);

/// The five variants with polynomial-time engines, in the column order of the
/// comparison tables: non-strict sh, non-strict shfm, strict sh, strict shfm,
/// strict pfm.
inline constexpr std::array<Variant, 5> kPolynomialVariants = {{
    {Criterion::kShortest, false},
    {Criterion::kShortestForemost, false},
    {Criterion::kShortest, true},
    {Criterion::kShortestForemost, true},
    {Criterion::kPrefixForemost, true},
}};

template <class Num>
struct BasicBetweenness {
  Variant variant;
  std::vector<Num> scores;
};

}  // namespace tempo_btw
