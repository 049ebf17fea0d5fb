#include "hurwitz/galois.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hurwitz/gaussian.hpp"
#include "hurwitz/lattice_cover.hpp"

namespace hurwitz
{

namespace
{

Rational frac(Rational const &q)
{
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational out = q - Rational(fl);
  out.canonicalize();
  return out;
}

bool odd_norm(long a, long b)
{
  return ((a + b) % 2 + 2) % 2 == 1;
}

} // namespace

TorusPoint::TorusPoint(Rational re, Rational im)
  : _re(frac(re)), _im(frac(im))
{}

TorusPoint TorusPoint::rotated(int exponent) const
{
  switch (((exponent % 4) + 4) % 4) {
  case 0:
    return *this;
  case 1:
    return {-_im, _re};
  case 2:
    return {-_re, -_im};
  default:
    return {_im, -_re};
  }
}

TorusPoint operator+(TorusPoint const &a, TorusPoint const &b)
{
  return {a._re + b._re, a._im + b._im};
}

TorusPoint operator-(TorusPoint const &a)
{
  return {-a._re, -a._im};
}

bool operator==(TorusPoint const &a, TorusPoint const &b)
{
  return a._re == b._re && a._im == b._im;
}

bool operator<(TorusPoint const &a, TorusPoint const &b)
{
  if (a._re != b._re)
    return a._re < b._re;
  return a._im < b._im;
}

TorusPoint torus_delta()
{
  return {Rational(1, 2), Rational(1, 2)};
}

TorusAffineMap::TorusAffineMap(int rot, TorusPoint c)
  : rotation(((rot % 4) + 4) % 4), offset(std::move(c))
{}

bool operator<(TorusAffineMap const &a, TorusAffineMap const &b)
{
  if (a.rotation != b.rotation)
    return a.rotation < b.rotation;
  return a.offset < b.offset;
}

TorusAffineMap torus_compose(TorusAffineMap const &g1, TorusAffineMap const &g2)
{
  return {g1.rotation + g2.rotation, g2.offset.rotated(g1.rotation) + g1.offset};
}

TorusAffineMap torus_inverse(TorusAffineMap const &g)
{
  return {-g.rotation, -g.offset.rotated(-g.rotation)};
}

TorusAffineMap torus_alpha() { return {1, TorusPoint()}; }
TorusAffineMap torus_beta() { return {2, torus_delta()}; }
TorusAffineMap torus_translation(TorusPoint c) { return {0, std::move(c)}; }

namespace
{

// lambda / beta = lambda conj(beta) / N(beta)
TorusPoint divide_into_torus(GaussInt const &lambda, GaussInt const &beta)
{
  auto const n = norm(beta);
  auto const w = lambda * beta.conj();
  return {make_rational(w.re, n), make_rational(w.im, n)};
}

} // namespace

std::vector<TorusPoint> kernel_points(long a, long b)
{
  GaussInt const beta(a, b);
  ResidueSystem const residues(beta);
  std::vector<TorusPoint> out;
  out.reserve(residues.size());
  for (auto const &lambda : residues.reps())
    out.push_back(divide_into_torus(lambda, beta));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TorusAffineMap> build_galois_group(long a, long b)
{
  if (a == 0 && b == 0)
    throw ZeroModulus("build_galois_group: zero modulus");
  if (!odd_norm(a, b))
    throw EvenNorm("build_galois_group: a^2 + b^2 must be odd");

  GaussInt const beta(a, b);
  // 1/beta and i/beta generate beta^-1 Z[i] / Z[i].
  std::vector<TorusAffineMap> const gens{
      torus_alpha(), torus_beta(),
      torus_translation(divide_into_torus(GaussInt(1, 0), beta)),
      torus_translation(divide_into_torus(GaussInt(0, 1), beta))};

  std::set<TorusAffineMap> elements{TorusAffineMap()};
  std::vector<TorusAffineMap> frontier{TorusAffineMap()};
  while (!frontier.empty()) {
    std::vector<TorusAffineMap> next;
    for (auto const &h : frontier)
      for (auto const &g : gens) {
        auto hg = torus_compose(h, g);
        if (elements.insert(hg).second)
          next.push_back(std::move(hg));
      }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

bool GaloisReport::all() const
{
  return group_order == static_cast<std::size_t>(8 * d) &&
         translation_order == static_cast<std::size_t>(2 * d) &&
         gamma_is_delta_translation && gamma_central && translations_match &&
         linear_part_surjective && kernel_is_translations &&
         quotient_order == static_cast<std::size_t>(4 * d) &&
         quotient_matches_lattice;
}

GaloisReport structure_checks(long a, long b)
{
  GaloisReport r;
  r.d = a * a + b * b;
  auto const group = build_galois_group(a, b);
  r.group_order = group.size();

  auto const gamma = torus_compose(torus_compose(torus_alpha(), torus_alpha()),
                                   torus_beta());
  r.gamma_is_delta_translation = gamma == torus_translation(torus_delta());

  r.gamma_central = std::all_of(group.begin(), group.end(), [&](auto const &g) {
    return torus_compose(g, gamma) == torus_compose(gamma, g);
  });

  std::vector<TorusPoint> translations;
  std::array<std::size_t, 4> per_rotation{};
  for (auto const &g : group) {
    ++per_rotation[g.rotation];
    if (g.is_translation())
      translations.push_back(g.offset);
  }
  std::sort(translations.begin(), translations.end());
  r.translation_order = translations.size();

  std::vector<TorusPoint> expected;
  for (auto const &kappa : kernel_points(a, b)) {
    expected.push_back(kappa);
    expected.push_back(kappa + torus_delta());
  }
  std::sort(expected.begin(), expected.end());
  r.translations_match = translations == expected;

  r.linear_part_surjective =
      std::all_of(per_rotation.begin(), per_rotation.end(),
                  [](std::size_t n) { return n > 0; });
  // Fibres of the rotation map are cosets of its kernel, which is exactly
  // the translation subgroup.
  r.kernel_is_translations =
      std::all_of(per_rotation.begin(), per_rotation.end(),
                  [&](std::size_t n) { return n == translations.size(); });

  std::set<TorusAffineMap> paired;
  for (auto const &g : group) {
    if (paired.count(g))
      continue;
    auto partner = torus_compose(gamma, g);
    if (partner == g)
      break;
    paired.insert(g);
    paired.insert(std::move(partner));
    ++r.quotient_order;
  }
  if (paired.size() != group.size())
    r.quotient_order = 0;

  auto const cover = build_lattice_cover(a, b);
  r.lattice_group_order = verify_certificate(cover.certificate).group_order;
  // The quotient acts faithfully on the fibre only once there is more than
  // one point to act on.
  auto const d = static_cast<std::size_t>(r.d);
  r.quotient_matches_lattice =
      r.lattice_group_order &&
      (d == 1 ? *r.lattice_group_order == expected_group_order(1)
              : *r.lattice_group_order == r.quotient_order);
  return r;
}

bool commutation_check(long a, long b)
{
  if (a == 0 && b == 0)
    throw ZeroModulus("commutation_check: zero multiplier");
  // (a + bi)(1 + i)/2 - (1 + i)/2 = ((a - b - 1) + (a + b - 1) i) / 2
  auto const re = make_rational(Integer(a - b - 1), 2);
  auto const im = make_rational(Integer(a + b - 1), 2);
  return re.get_den() == 1 && im.get_den() == 1;
}

} // namespace hurwitz
