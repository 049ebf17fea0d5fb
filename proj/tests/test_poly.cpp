#include <doctest.h>

#include "hurwitz/poly.hpp"

#include <random>

using namespace hurwitz;

namespace
{

QiScalar qi(long re, long im = 0) { return {re, im}; }

PolyQi from_roots(std::vector<QiScalar> const &roots)
{
  PolyQi p(QiScalar(1));
  for (auto const &r : roots)
    p *= PolyQi{-r, 1};
  return p;
}

PolyQi random_poly(std::mt19937 &rng, int degree)
{
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<QiScalar> coeffs;
  for (int i = 0; i <= degree; ++i)
    coeffs.push_back(qi(c(rng), c(rng)));
  coeffs.back() = qi(1 + (c(rng) + 9) % 5, c(rng));
  return PolyQi(coeffs);
}

} // namespace

TEST_CASE("Q(i) scalars")
{
  auto const z = qi(3, 4);
  CHECK(z * z.inverse() == qi(1));
  CHECK(z.norm() == 25);
  CHECK(QiScalar::i() * QiScalar::i() == qi(-1));
  CHECK(pow(qi(1, 1), 4) == qi(-4));
  CHECK_THROWS_AS(QiScalar().inverse(), std::domain_error);

  auto const s = sqrt_qi(qi(-3, 4));
  REQUIRE(s.has_value());
  CHECK(*s * *s == qi(-3, 4));
  CHECK_FALSE(sqrt_qi(qi(2)).has_value());
  CHECK(sqrt_qi(qi(0, 2)).has_value()); // (1+i)^2

  auto const f = fourth_root_qi(qi(-4));
  REQUIRE(f.has_value());
  CHECK(pow(*f, 4) == qi(-4));
  CHECK_FALSE(fourth_root_qi(QiScalar(make_rational(-3, 25), make_rational(4, 25))).has_value());
  CHECK(fourth_root_qi(QiScalar(make_rational(1, 16))).has_value());
}

TEST_CASE("polynomial basics")
{
  PolyQi const zero;
  CHECK(zero.degree() == -1);
  CHECK(PolyQi{1, 0, 0}.degree() == 0);
  auto const p = PolyQi{qi(1), qi(0, 2), qi(3)};
  CHECK(p(qi(0, 1)) == qi(1) + qi(0, 2) * qi(0, 1) + qi(-3));
  CHECK(p.derivative() == PolyQi{qi(0, 2), qi(6)});
  CHECK(p.reflected() == PolyQi{qi(1), qi(0, -2), qi(3)});
  CHECK(p.conjugated() == PolyQi{qi(1), qi(0, -2), qi(3)});
  CHECK(p.monic().leading() == qi(1));
  CHECK(compose(PolyQi::x() * PolyQi::x(), PolyQi{1, 1}) == PolyQi{1, 2, 1});
}

TEST_CASE("division")
{
  std::mt19937 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    auto const a = random_poly(rng, 1 + trial % 7);
    auto const b = random_poly(rng, trial % 4);
    auto const [quot, rem] = divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS_AS(divmod(PolyQi{1, 1}, PolyQi()), std::domain_error);
  CHECK_THROWS_AS(exact_div(PolyQi{1, 0, 1}, PolyQi{1, 1}), std::domain_error);
}

TEST_CASE("gcd")
{
  auto const common = from_roots({qi(1, 1), qi(-2)});
  auto const a = common * from_roots({qi(3)});
  auto const b = common * from_roots({qi(0, 5), qi(7, -1)});
  CHECK(gcd(a, b) == common);
  CHECK(gcd(from_roots({qi(1)}), from_roots({qi(2)})) == PolyQi(qi(1)));
  CHECK(gcd(PolyQi(), PolyQi()).is_zero());
  CHECK(gcd(PolyQi(), a * qi(3)) == a);
}

TEST_CASE("squarefree decomposition")
{
  auto const f1 = from_roots({qi(1), qi(0, 1)});
  auto const f2 = from_roots({qi(-3, 2)});
  auto const f3 = from_roots({qi(5), qi(2, 2)});
  auto const p = f1 * pow(f2, 2) * pow(f3, 3);
  CHECK_FALSE(is_squarefree(p));
  CHECK(is_squarefree(f1 * f2 * f3));
  CHECK(radical(p) == f1 * f2 * f3);

  auto const parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::pair{f1, 1u});
  CHECK(parts[1] == std::pair{f2, 2u});
  CHECK(parts[2] == std::pair{f3, 3u});

  auto const root = monic_root(pow(f1 * f3, 4), 4);
  REQUIRE(root.has_value());
  CHECK(*root == f1 * f3);
  CHECK_FALSE(monic_root(pow(f1, 2) * f2, 2).has_value());
}

TEST_CASE("rational functions")
{
  RatQi const f(PolyQi{0, 0, 4}, pow(PolyQi{1, 0, 1}, 2));
  CHECK(f.map_degree() == 4);
  CHECK(f.den().leading() == qi(1));
  CHECK(f(qi(1)) == qi(1));

  RatQi const g(PolyQi{1, 1} * PolyQi{2, 1}, PolyQi{1, 1} * PolyQi{0, 3});
  CHECK(g.num() == PolyQi{qi(2, 0) / qi(3), qi(1) / qi(3)});
  CHECK(g.den() == PolyQi::x());
  CHECK(g * g.inverse() == RatQi(QiScalar(1)));
  CHECK(compose(RatQi::x(), f) == f);
  CHECK(compose(f, RatQi::x()) == f);
  CHECK_THROWS_AS(RatQi(PolyQi{1}, PolyQi()), std::domain_error);

  // (x/(x+1)) composed with (1/x) equals 1/(1+x)
  RatQi const h(PolyQi::x(), PolyQi{1, 1});
  CHECK(compose(h, RatQi::x().inverse()) == RatQi(PolyQi{1}, PolyQi{1, 1}));
  CHECK(h.reflected() == RatQi(-PolyQi::x(), PolyQi{1, -1}));
  CHECK(h - h == RatQi());
}
