#ifndef HURWITZ_SEARCH_HPP
#define HURWITZ_SEARCH_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "hurwitz/certificate.hpp"

namespace hurwitz
{

class InvalidDegree : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

std::string_view to_string(SearchStatus s);
SearchStatus parse_search_status(std::string_view name);

struct SearchOutcome
{
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<CoverCertificate> certificate;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::uint64_t default_search_budget = 1'000'000'000;

struct SearchOptions
{
  std::uint64_t budget = default_search_budget;
  unsigned workers = 1;
};

// (0)(1 2 3 4)(5 6 7 8)...
Perm canonical_sigma0(std::size_t d);

/// Decides whether a triple with sigma0 sigma1 = sigmaInf of types
/// (1,4^k), (1,4^k), (1,2^2k) acting transitively exists in degree d.
///
/// Every solution is conjugate to one with sigma0 canonical, and the
/// centraliser of the canonical sigma0 moves any non-zero point to 1, so
/// the search fixes sigma0, takes the fixed point of tau = sigmaInf in
/// {0, 1}, and enumerates the remaining pairings of tau in lexicographic
/// order of its image vector. The witness returned is the least tau; the
/// same witness is returned for any number of workers.
SearchOutcome search_cover(std::size_t d, SearchOptions const &options = {});

namespace search_detail
{

// Calls `visit` with every accepted tau under the reduction above, in
// lexicographic order. Used to check completeness at small degree.
void for_each_canonical_solution(std::size_t d,
                                 std::function<void(Perm const &)> const &visit);

} // namespace search_detail

} // namespace hurwitz

#endif
