#include <doctest.h>

#include "hurwitz/galois.hpp"
#include "hurwitz/lattice_cover.hpp"

#include <algorithm>
#include <random>

using namespace hurwitz;

namespace
{

Rational q(long n, long d) { return make_rational(n, d); }

} // namespace

TEST_CASE("torus points reduce into the unit square")
{
  TorusPoint const p(q(7, 5), q(-1, 3));
  CHECK(p.re() == q(2, 5));
  CHECK(p.im() == q(2, 3));
  CHECK(TorusPoint(3, -2).is_zero());
  CHECK((p + (-p)).is_zero());
  // i (2/5 + 2/3 i) = -2/3 + 2/5 i
  CHECK(p.rotated(1) == TorusPoint(q(1, 3), q(2, 5)));
  CHECK(p.rotated(4) == p);
  CHECK(torus_delta() == TorusPoint(q(1, 2), q(1, 2)));
  CHECK(torus_delta().rotated(1) == torus_delta());
}

TEST_CASE("kernel_points")
{
  auto const one = kernel_points(1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_zero());

  auto const five = kernel_points(2, 1);
  CHECK(five.size() == 5);
  CHECK(std::find(five.begin(), five.end(), TorusPoint(q(2, 5), q(4, 5))) != five.end());

  auto const nine = kernel_points(3, 0);
  REQUIRE(nine.size() == 9);
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y)
      CHECK(std::find(nine.begin(), nine.end(), TorusPoint(q(x, 3), q(y, 3))) != nine.end());

  CHECK_THROWS(kernel_points(0, 0));
}

TEST_CASE("build_galois_group orders")
{
  CHECK(build_galois_group(1, 0).size() == 8);
  auto const g = build_galois_group(2, 1);
  CHECK(g.size() == 40);
  CHECK(std::count_if(g.begin(), g.end(), [](auto const &e) { return e.is_translation(); }) == 10);
  CHECK_THROWS_AS(build_galois_group(1, 1), EvenNorm);
}

TEST_CASE("structure_checks")
{
  auto const five = structure_checks(2, 1);
  CHECK(five.quotient_order == 20);
  CHECK(five.lattice_group_order == 20u);
  CHECK(five.gamma_is_delta_translation);
  CHECK(five.gamma_central);
  CHECK(five.all());

  auto const one = structure_checks(1, 0);
  CHECK(one.quotient_order == 4);
  CHECK(one.lattice_group_order == 1u);
  CHECK(one.all());

  auto const thirteen = structure_checks(3, 2);
  CHECK(thirteen.group_order == 104);
  CHECK(thirteen.translation_order == 26);
  CHECK(thirteen.quotient_order == 52);
  CHECK(thirteen.all());

  auto const nine = structure_checks(3, 0);
  CHECK(nine.group_order == 72);
  CHECK(nine.all());
}

TEST_CASE("commutation_check")
{
  CHECK(commutation_check(2, 1));
  CHECK_FALSE(commutation_check(1, 1));
  CHECK(commutation_check(1, 0));
  CHECK_THROWS(commutation_check(0, 0));
}

TEST_CASE("property: commutation holds exactly for odd norms")
{
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      if (a == 0 && b == 0)
        continue;
      CHECK(commutation_check(a, b) == ((a * a + b * b) % 2 == 1));
    }
}

TEST_CASE("property: group axioms on the enumerated group")
{
  for (auto [a, b] : {std::pair{2L, 1L}, {3L, 0L}, {3L, 2L}}) {
    auto const g = build_galois_group(a, b);
    auto const contains = [&](TorusAffineMap const &e) {
      return std::binary_search(g.begin(), g.end(), e);
    };
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      auto const &x = g[pick(rng)];
      auto const &y = g[pick(rng)];
      auto const &z = g[pick(rng)];
      CHECK(torus_compose(torus_compose(x, y), z) == torus_compose(x, torus_compose(y, z)));
      CHECK(contains(torus_compose(x, y)));
    }
    for (auto const &e : g) {
      auto const inv = torus_inverse(e);
      CHECK(contains(inv));
      CHECK(torus_compose(e, inv) == TorusAffineMap());
    }
  }
}

TEST_CASE("property: conjugating a translation rotates its offset")
{
  auto const g = build_galois_group(3, 2);
  std::vector<TorusAffineMap> rotations, translations;
  for (auto const &e : g)
    (e.is_translation() ? translations : rotations).push_back(e);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    auto const &rho = rotations[rng() % rotations.size()];
    auto const &tau = translations[rng() % translations.size()];
    auto const conj = torus_compose(rho, torus_compose(tau, torus_inverse(rho)));
    CHECK(conj == torus_translation(tau.offset.rotated(rho.rotation)));
  }
}

TEST_CASE("property: kernel points form a subgroup")
{
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b) {
      if (a == 0 && b == 0)
        continue;
      auto const k = kernel_points(a, b);
      CHECK(k.size() == static_cast<std::size_t>(a * a + b * b));
      auto const contains = [&](TorusPoint const &p) {
        return std::binary_search(k.begin(), k.end(), p);
      };
      CHECK(contains(TorusPoint()));
      for (auto const &p : k) {
        CHECK(contains(-p));
        for (auto const &r : k)
          CHECK(contains(p + r));
      }
    }
}
