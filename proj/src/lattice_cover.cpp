#include "hurwitz/lattice_cover.hpp"

#include "hurwitz/prime_cover.hpp"

namespace hurwitz
{

AffineLatticeMap::AffineLatticeMap(int rot, GaussInt lambda)
  : rotation(((rot % 4) + 4) % 4), shift(std::move(lambda))
{}

AffineLatticeMap affine_compose(AffineLatticeMap const &g1,
                                AffineLatticeMap const &g2)
{
  return {g1.rotation + g2.rotation, g1.unit() * g2.shift + g1.shift};
}

AffineLatticeMap affine_inverse(AffineLatticeMap const &g)
{
  // z = u w + lambda  =>  w = u^-1 z - u^-1 lambda
  auto const inv_unit = GaussInt::unit(-g.rotation);
  return {-g.rotation, -(inv_unit * g.shift)};
}

AffineLatticeMap affine_power(AffineLatticeMap const &g, unsigned n)
{
  auto out = AffineLatticeMap::identity();
  for (unsigned i = 0; i < n; ++i)
    out = affine_compose(out, g);
  return out;
}

AffineLatticeMap lattice_c0() { return {1, GaussInt(0, 0)}; }
AffineLatticeMap lattice_c1() { return {1, GaussInt(1, 0)}; }
AffineLatticeMap lattice_c_inf() { return {2, GaussInt(0, 1)}; }

Perm coset_action(AffineLatticeMap const &g, ResidueSystem const &residues)
{
  std::vector<Perm::point_type> images(residues.size());
  for (std::size_t mu = 0; mu < residues.size(); ++mu)
    images[mu] = static_cast<Perm::point_type>(
        residues.reduce(g(residues.rep(mu))));
  return Perm(std::move(images));
}

LatticeCover build_lattice_cover(long a, long b)
{
  GaussInt const beta(a, b);
  if (beta.is_zero())
    throw ZeroModulus("build_lattice_cover: zero modulus");
  if (norm(beta) % 2 == 0)
    throw EvenNorm("build_lattice_cover: a^2 + b^2 must be odd");

  ResidueSystem residues(beta);
  auto s0 = coset_action(lattice_c0(), residues);
  auto s1 = coset_action(lattice_c1(), residues);
  auto sinf = coset_action(lattice_c_inf(), residues);
  return {std::move(residues),
          CoverCertificate(std::move(s0), std::move(s1), std::move(sinf),
                           Provenance::Lattice)};
}

UniversalRelationsReport universal_relations_check()
{
  UniversalRelationsReport r;
  auto const c0 = lattice_c0();
  auto const c1 = lattice_c1();
  auto const cinf = lattice_c_inf();

  r.orders = affine_power(c0, 4).is_identity() &&
             affine_power(c1, 4).is_identity() &&
             affine_power(cinf, 2).is_identity();
  r.product = affine_compose(c0, c1) == cinf;

  auto const u = affine_compose(affine_power(c0, 3), c1);
  auto const v = affine_compose(c0, affine_power(c1, 3));
  r.u_shift = u.shift;
  r.v_shift = v.shift;
  r.translations = u.is_translation() && v.is_translation();
  r.commute = affine_compose(u, v) == affine_compose(v, u);

  Integer const det = u.shift.re * v.shift.im - u.shift.im * v.shift.re;
  r.generate_lattice = det == 1 || det == -1;
  return r;
}

bool CommutatorReport::consistent(std::size_t d) const
{
  bool const trivial = additive_order == 1;
  return order_matches && perm_order == additive_order &&
         fixed_point_free == !trivial && (!is_prime(d) || prime_cycle);
}

CommutatorReport commutator_translation(long a, long b)
{
  auto const cover = build_lattice_cover(a, b);
  auto const &cert = cover.certificate;
  auto const d = cert.d();

  CommutatorReport r;
  auto const c0 = lattice_c0();
  auto const c1 = lattice_c1();
  auto const comm =
      affine_compose(c0, affine_compose(c1, affine_compose(affine_inverse(c0),
                                                           affine_inverse(c1))));
  r.translation = comm.shift;

  GaussInt multiple = r.translation;
  r.additive_order = 1;
  while (!divides(cover.residues.modulus(), multiple)) {
    multiple += r.translation;
    ++r.additive_order;
  }

  auto const perm = commutator(cert.sigma0(), cert.sigma1());
  r.type = cycle_type(perm);
  r.perm_order = perm_order(perm);
  r.fixed_point_free = perm.fixed_points() == 0;
  r.order_matches = true;
  for (auto len : r.type.lengths)
    r.order_matches = r.order_matches && len == r.additive_order;
  r.prime_cycle = r.type.lengths.size() == 1 && r.type.lengths[0] == d;
  return r;
}

} // namespace hurwitz
