#include "hurwitz/certificate.hpp"

#include <array>

namespace hurwitz
{

std::string_view to_string(Provenance p)
{
  switch (p) {
  case Provenance::Prime:
    return "Prime";
  case Provenance::Lattice:
    return "Lattice";
  case Provenance::Search:
    return "Search";
  case Provenance::Manual:
    return "Manual";
  }
  return "Manual";
}

Provenance parse_provenance(std::string_view name)
{
  for (auto p : {Provenance::Prime, Provenance::Lattice, Provenance::Search,
                 Provenance::Manual})
    if (to_string(p) == name)
      return p;
  throw std::invalid_argument("unknown provenance '" + std::string(name) + "'");
}

CoverCertificate::CoverCertificate(Perm sigma0, Perm sigma1, Perm sigma_inf,
                                   Provenance provenance)
  : _sigma0(std::move(sigma0)),
    _sigma1(std::move(sigma1)),
    _sigma_inf(std::move(sigma_inf)),
    _provenance(provenance)
{
  if (_sigma1.degree() != _sigma0.degree() ||
      _sigma_inf.degree() != _sigma0.degree())
    throw DegreeMismatch("CoverCertificate: permutations of different degree");
  if (_sigma0.degree() % 4 != 1)
    throw std::invalid_argument("CoverCertificate: degree must be 1 mod 4");
}

std::size_t expected_group_order(std::size_t d)
{
  return d == 1 ? 1 : 4 * d;
}

bool VerificationReport::order_as_expected(std::size_t d) const
{
  return group_order && *group_order == expected_group_order(d);
}

long euler_characteristic(CoverCertificate const &c)
{
  auto const d = static_cast<long>(c.d());
  long cycles = 0;
  for (auto const *p : {&c.sigma0(), &c.sigma1(), &c.sigma_inf()})
    cycles += static_cast<long>(cycle_type(*p).cycles());
  return 2 * d - (3 * d - cycles);
}

VerificationReport verify_certificate(CoverCertificate const &c,
                                      std::size_t order_cap)
{
  VerificationReport r;
  r.product = compose(c.sigma0(), c.sigma1()) == c.sigma_inf();

  auto const fours = CycleType::one_then_fours(c.k());
  r.types = cycle_type(c.sigma0()) == fours &&
            cycle_type(c.sigma1()) == fours &&
            cycle_type(c.sigma_inf()) == CycleType::one_then_twos(c.k());

  std::array<Perm, 3> const gens{c.sigma0(), c.sigma1(), c.sigma_inf()};
  r.transitive = is_transitive(gens, c.d());
  r.riemann_hurwitz = euler_characteristic(c) == 2;
  r.group_order = generated_group_order(gens, order_cap);
  return r;
}

} // namespace hurwitz
