#include <doctest.h>

#include "hurwitz/lattice_cover.hpp"

#include <random>

using namespace hurwitz;

namespace
{

AffineLatticeMap random_map(std::mt19937 &rng)
{
  std::uniform_int_distribution<int> rot(0, 3);
  std::uniform_int_distribution<int> part(-50, 50);
  return {rot(rng), GaussInt(part(rng), part(rng))};
}

} // namespace

TEST_CASE("affine group arithmetic")
{
  auto const c0 = lattice_c0();
  auto const c1 = lattice_c1();
  auto const cinf = lattice_c_inf();
  CHECK(c0 == AffineLatticeMap(1, 0));
  CHECK(c1 == AffineLatticeMap(1, 1));
  CHECK(cinf == AffineLatticeMap(2, GaussInt(0, 1)));
  CHECK(affine_compose(c0, c1) == cinf);
  CHECK(affine_power(c0, 4).is_identity());
  CHECK(affine_power(c1, 4).is_identity());
  CHECK(affine_power(cinf, 2).is_identity());
  CHECK(affine_compose(affine_power(c0, 3), c1) == AffineLatticeMap::translation({0, -1}));
  CHECK(affine_compose(c0, affine_power(c1, 3)) == AffineLatticeMap::translation(-1));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto const g = random_map(rng);
    auto const h = random_map(rng);
    GaussInt const z(trial - 20, 3 * trial);
    CHECK(affine_compose(g, h)(z) == g(h(z)));
    CHECK(affine_compose(g, affine_inverse(g)).is_identity());
  }
}

TEST_CASE("universal relations")
{
  auto const r = universal_relations_check();
  CHECK(r.orders);
  CHECK(r.product);
  CHECK(r.translations);
  CHECK(r.commute);
  CHECK(r.generate_lattice);
  CHECK(r.u_shift == GaussInt(0, -1));
  CHECK(r.v_shift == GaussInt(-1));
  CHECK(r.all());
}

TEST_CASE("coset_action")
{
  ResidueSystem const five({2, 1});
  CHECK(coset_action(AffineLatticeMap::identity(), five).is_identity());

  auto const rot = coset_action(lattice_c0(), five);
  CHECK(rot(0) == 0);
  CHECK(rot.fixed_points() == 1);
  CHECK(cycle_type(rot) == CycleType{{1, 4}});

  auto const shift = coset_action(AffineLatticeMap::translation(1), five);
  CHECK(cycle_type(shift) == CycleType{{5}});
}

TEST_CASE("build_lattice_cover examples")
{
  SUBCASE("(1,0)")
  {
    auto const c = build_lattice_cover(1, 0).certificate;
    CHECK(c.d() == 1);
    CHECK(verify_certificate(c).valid());
  }
  SUBCASE("(2,1)")
  {
    auto const cover = build_lattice_cover(2, 1);
    auto const &c = cover.certificate;
    CHECK(c.provenance() == Provenance::Lattice);
    // i = 3 mod (2 + i), so c0 is x -> 3x and cInf is x -> -x + 3 on Z/5.
    CHECK(cover.residues.reduce({0, 1}) == 3);
    CHECK(c.sigma0() == Perm::from_cycles(5, {{1, 3, 4, 2}}));
    CHECK(c.sigma_inf() == Perm::from_cycles(5, {{0, 3}, {1, 2}}));
    CHECK(c.sigma_inf()(4) == 4);
    auto const r = verify_certificate(c);
    CHECK(r.valid());
    CHECK(r.group_order == 20u);
  }
  SUBCASE("(3,0)")
  {
    auto const c = build_lattice_cover(3, 0).certificate;
    CHECK(cycle_type(c.sigma0()) == CycleType{{1, 4, 4}});
    CHECK(cycle_type(c.sigma1()) == CycleType{{1, 4, 4}});
    CHECK(cycle_type(c.sigma_inf()) == CycleType{{1, 2, 2, 2, 2}});
    auto const r = verify_certificate(c);
    CHECK(r.valid());
    CHECK(r.group_order == 36u);
  }
  CHECK_THROWS_AS(build_lattice_cover(1, 1), EvenNorm);
  CHECK_THROWS_AS(build_lattice_cover(2, 0), EvenNorm);
  CHECK_THROWS_AS(build_lattice_cover(0, 0), ZeroModulus);
}

TEST_CASE("commutator_translation")
{
  auto const five = commutator_translation(2, 1);
  CHECK(five.translation == GaussInt(-1, 1));
  CHECK(five.type == CycleType{{5}});
  CHECK(five.prime_cycle);
  CHECK(five.consistent(5));

  auto const nine = commutator_translation(3, 0);
  CHECK(nine.type == CycleType{{3, 3, 3}});
  CHECK(nine.additive_order == 3);
  CHECK(nine.fixed_point_free);
  CHECK(nine.consistent(9));

  auto const one = commutator_translation(1, 0);
  CHECK(one.type == CycleType{{1}});
  CHECK(one.consistent(1));
}

TEST_CASE("property: coset action is a homomorphism")
{
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> part(-15, 15);
  int tested = 0;
  while (tested < 40) {
    GaussInt const beta(part(rng), part(rng));
    auto const n = norm(beta);
    if (n == 0 || n > 200 || n % 2 == 0)
      continue;
    ++tested;
    ResidueSystem const r(beta);
    for (int inner = 0; inner < 10; ++inner) {
      auto const g1 = random_map(rng);
      auto const g2 = random_map(rng);
      CHECK(coset_action(affine_compose(g1, g2), r) ==
            compose(coset_action(g1, r), coset_action(g2, r)));
    }
  }
}

TEST_CASE("property: a unit multiple of the modulus gives the same certificate")
{
  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      auto const n = a * a + b * b;
      if (n == 0 || n % 2 == 0 || n > 200)
        continue;
      auto const c = build_lattice_cover(a, b);
      auto const rotated = build_lattice_cover(-b, a);
      CHECK(c.certificate == rotated.certificate);
      CHECK(c.residues.reps() == rotated.residues.reps());
    }
}

TEST_CASE("property: sigma0 and its square each fix one residue")
{
  for (long a = 0; a <= 16; ++a)
    for (long b = 0; b <= a; ++b) {
      auto const n = a * a + b * b;
      if (n % 2 == 0 || n > 300)
        continue;
      auto const c = build_lattice_cover(a, b).certificate;
      auto const s0 = c.sigma0();
      CHECK(s0.fixed_points() == 1);
      CHECK(s0(0) == 0);
      CHECK(compose(s0, s0).fixed_points() == 1);
      CHECK(compose(c.sigma1(), c.sigma1()).fixed_points() == 1);
      auto const r = verify_certificate(c);
      CHECK(r.valid());
      CHECK(r.order_as_expected(c.d()));
      CHECK(commutator_translation(a, b).consistent(c.d()));
    }
}
