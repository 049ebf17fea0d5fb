#ifndef HURWITZ_SURVEY_HPP
#define HURWITZ_SURVEY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/search.hpp"

namespace hurwitz
{

enum class ConstructionResult { NotAttempted, Found, Failed };

struct SurveyRow
{
  std::uint64_t d = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> representations;
  ConstructionResult lattice = ConstructionResult::NotAttempted;
  ConstructionResult prime = ConstructionResult::NotAttempted;
  std::optional<SearchStatus> search; // nullopt: above the search cap
  std::vector<std::string> inconsistencies;

  bool representable() const { return !representations.empty(); }
  bool consistent() const { return inconsistencies.empty(); }
};

inline constexpr std::uint64_t default_survey_search_cap = 21;

std::string_view to_string(ConstructionResult r);

/// One row per d = 1 mod 4 in [dmin, dmax].
std::vector<SurveyRow> survey(std::uint64_t dmin, std::uint64_t dmax,
                              std::uint64_t search_cap = default_survey_search_cap,
                              SearchOptions const &search_options = {});

} // namespace hurwitz

#endif
