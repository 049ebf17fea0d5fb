#include <doctest.h>

#include "hurwitz/gaussian.hpp"
#include "hurwitz/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace hurwitz;

namespace
{

std::vector<Perm> all_perms(std::size_t d)
{
  std::vector<Perm::point_type> images(d);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<Perm> out;
  do
    out.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool is_solution(Perm const &s0, Perm const &s1)
{
  std::size_t const k = (s0.degree() - 1) / 4;
  std::vector<Perm> gens{s0, s1};
  return cycle_type(s0) == CycleType::one_then_fours(k) &&
         cycle_type(s1) == CycleType::one_then_fours(k) &&
         cycle_type(compose(s0, s1)) == CycleType::one_then_twos(k) &&
         is_transitive(gens, s0.degree());
}

Perm conjugate(Perm const &g, Perm const &f) { return compose(g, compose(f, inverse(g))); }

} // namespace

TEST_CASE("canonical sigma0")
{
  CHECK(canonical_sigma0(1) == Perm(1));
  CHECK(canonical_sigma0(9) == Perm::from_cycles(9, {{1, 2, 3, 4}, {5, 6, 7, 8}}));
  CHECK_THROWS_AS(search_cover(7), InvalidDegree);
  CHECK_THROWS_AS(search_cover(0), InvalidDegree);
}

TEST_CASE("search examples")
{
  auto const one = search_cover(1);
  CHECK(one.status == SearchStatus::Found);
  REQUIRE(one.certificate.has_value());
  CHECK(one.certificate->d() == 1);

  for (std::size_t d : {5u, 13u, 17u}) {
    CAPTURE(d);
    auto const out = search_cover(d);
    CHECK(out.status == SearchStatus::Found);
    REQUIRE(out.certificate.has_value());
    CHECK(out.certificate->provenance() == Provenance::Search);
    CHECK(out.certificate->sigma0() == canonical_sigma0(d));
    CHECK(verify_certificate(*out.certificate).valid());
  }

  auto const none = search_cover(21);
  CHECK(none.status == SearchStatus::Exhausted);
  CHECK_FALSE(none.certificate.has_value());
}

TEST_CASE("budget")
{
  auto const out = search_cover(21, {.budget = 1000, .workers = 1});
  CHECK(out.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(out.certificate.has_value());
  CHECK(out.nodes_explored > 1000);
  auto const par = search_cover(21, {.budget = 1000, .workers = 3});
  CHECK(par.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("status names round-trip")
{
  for (auto s : {SearchStatus::Found, SearchStatus::Exhausted, SearchStatus::BudgetExceeded})
    CHECK(parse_search_status(to_string(s)) == s);
}

TEST_CASE("completeness at d = 5 against all of S_5")
{
  std::set<Perm> canonical;
  search_detail::for_each_canonical_solution(5, [&](Perm const &tau) {
    canonical.insert(tau);
  });
  REQUIRE_FALSE(canonical.empty());

  auto const s0c = canonical_sigma0(5);
  for (auto const &tau : canonical) {
    CHECK(is_solution(s0c, compose(inverse(s0c), tau)));
    CHECK(tau.fixed_points() == 1);
    CHECK((tau(0) == 0 || tau(1) == 1));
  }

  auto const perms = all_perms(5);
  std::size_t solutions = 0;
  for (auto const &s0 : perms) {
    if (cycle_type(s0) != CycleType{{1, 4}})
      continue;
    for (auto const &s1 : perms) {
      if (!is_solution(s0, s1))
        continue;
      ++solutions;
      auto const tau = compose(s0, s1);
      bool reached = false;
      for (auto const &g : perms)
        if (conjugate(g, s0) == s0c && canonical.count(conjugate(g, tau))) {
          reached = true;
          break;
        }
      CHECK(reached);
    }
  }
  CHECK(solutions > 0);
}

TEST_CASE("enumeration order is lexicographic")
{
  std::vector<Perm> seen;
  search_detail::for_each_canonical_solution(9, [&](Perm const &tau) { seen.push_back(tau); });
  REQUIRE_FALSE(seen.empty());
  CHECK(std::is_sorted(seen.begin(), seen.end(), [](Perm const &a, Perm const &b) {
    return std::lexicographical_compare(a.images().begin(), a.images().end(),
                                        b.images().begin(), b.images().end());
  }));
  auto const found = search_cover(9);
  REQUIRE(found.certificate.has_value());
  CHECK(found.certificate->sigma_inf() == seen.front());
}

TEST_CASE("determinism and worker independence")
{
  for (std::size_t d : {5u, 9u, 13u, 17u}) {
    CAPTURE(d);
    auto const a = search_cover(d);
    auto const b = search_cover(d);
    CHECK(a.status == b.status);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.certificate == b.certificate);
    for (unsigned workers : {2u, 4u}) {
      auto const par = search_cover(d, {.budget = default_search_budget, .workers = workers});
      CHECK(par.status == a.status);
      CHECK(par.certificate == a.certificate);
    }
  }
  auto const serial = search_cover(21);
  auto const parallel = search_cover(21, {.budget = default_search_budget, .workers = 4});
  CHECK(parallel.status == SearchStatus::Exhausted);
  CHECK(parallel.nodes_explored == serial.nodes_explored);
}

TEST_CASE("agreement with representability up to 21")
{
  for (std::size_t d = 1; d <= 21; d += 4) {
    CAPTURE(d);
    auto const out = search_cover(d);
    bool const representable = !sum_two_squares(d).empty();
    CHECK((out.status == SearchStatus::Found) == representable);
    CHECK(out.status != SearchStatus::BudgetExceeded);
  }
}
