#include "hurwitz/prime_cover.hpp"

#include <string>

namespace hurwitz
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0)
      return false;
  return true;
}

std::uint64_t find_order4(std::uint64_t p)
{
  if (!is_prime(p))
    throw NotPrime(std::to_string(p) + " is not prime");
  if (p % 4 != 1)
    throw WrongResidueClass(std::to_string(p) + " is not 1 mod 4");

  for (std::uint64_t ell = 2; ell < p; ++ell)
    if ((ell * ell) % p == p - 1)
      return ell;
  // Unreachable: F_p^* is cyclic of order divisible by 4.
  throw std::logic_error("no element of order 4 in F_p^*");
}

Perm affine_perm(std::uint64_t p, std::uint64_t scale, std::uint64_t shift)
{
  std::vector<Perm::point_type> images(p);
  for (std::uint64_t x = 0; x < p; ++x)
    images[x] = static_cast<Perm::point_type>((scale * x + shift) % p);
  return Perm(std::move(images));
}

PrimeCover build_prime_cover(std::uint64_t p)
{
  auto const ell = find_order4(p);
  auto sigma0 = affine_perm(p, ell, 0);
  auto sigma1 = affine_perm(p, ell, ell - 1);
  // -x - ell - 1 = (p - 1) x + (p - ell - 1)
  auto sigma_inf = affine_perm(p, p - 1, p - ell - 1);
  return {{p, ell},
          CoverCertificate(std::move(sigma0), std::move(sigma1),
                           std::move(sigma_inf), Provenance::Prime)};
}

} // namespace hurwitz
