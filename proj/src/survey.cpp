#include "hurwitz/survey.hpp"

#include "hurwitz/gaussian.hpp"
#include "hurwitz/lattice_cover.hpp"
#include "hurwitz/prime_cover.hpp"

namespace hurwitz
{

std::string_view to_string(ConstructionResult r)
{
  switch (r) {
  case ConstructionResult::NotAttempted:
    return "not_attempted";
  case ConstructionResult::Found:
    return "found";
  case ConstructionResult::Failed:
    return "failed";
  }
  return "not_attempted";
}

namespace
{

ConstructionResult judge(CoverCertificate const &c)
{
  auto const report = verify_certificate(c);
  return report.valid() && report.order_as_expected(c.d()) ? ConstructionResult::Found
                                                     : ConstructionResult::Failed;
}

} // namespace

std::vector<SurveyRow> survey(std::uint64_t dmin, std::uint64_t dmax,
                              std::uint64_t search_cap,
                              SearchOptions const &search_options)
{
  std::vector<SurveyRow> rows;
  for (std::uint64_t d = dmin; d <= dmax; ++d) {
    if (d % 4 != 1)
      continue;
    SurveyRow row;
    row.d = d;
    row.representations = sum_two_squares(d);

    if (row.representable()) {
      auto const [x, y] = row.representations.front();
      row.lattice = judge(build_lattice_cover(static_cast<long>(x),
                                              static_cast<long>(y)).certificate);
      if (row.lattice != ConstructionResult::Found)
        row.inconsistencies.push_back("lattice construction failed verification");
    }
    if (is_prime(d)) {
      row.prime = judge(build_prime_cover(d).certificate);
      if (row.prime != ConstructionResult::Found)
        row.inconsistencies.push_back("prime construction failed verification");
      if (!row.representable())
        row.inconsistencies.push_back("prime 1 mod 4 without a two-squares representation");
    }
    if (d <= search_cap) {
      auto const outcome = search_cover(d, search_options);
      row.search = outcome.status;
      if (outcome.status == SearchStatus::Found) {
        if (!verify_certificate(*outcome.certificate).valid())
          row.inconsistencies.push_back("search witness failed verification");
        if (!row.representable())
          row.inconsistencies.push_back("search found a cover for a non-representable degree");
      } else if (outcome.status == SearchStatus::Exhausted && row.representable()) {
        row.inconsistencies.push_back("search exhausted a representable degree");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace hurwitz
