#ifndef HURWITZ_PRIME_COVER_HPP
#define HURWITZ_PRIME_COVER_HPP

#include <cstdint>
#include <stdexcept>

#include "hurwitz/certificate.hpp"

namespace hurwitz
{

class NotPrime : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class WrongResidueClass : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// p prime, p = 1 mod 4, and ell with ell^2 = -1 mod p (so ell has order 4).
struct PrimeCoverParams
{
  std::uint64_t p;
  std::uint64_t ell;
};

// Smallest ell >= 2 with ell^2 = -1 mod p.
std::uint64_t find_order4(std::uint64_t p);

struct PrimeCover
{
  PrimeCoverParams params;
  CoverCertificate certificate;
};

/// On F_p: sigma0 = L, sigma1 = T^-1 L T, sigmaInf = sigma0 sigma1 with
/// L(x) = ell x and T(x) = x + 1. Closed forms:
///   sigma1(x)   = ell x + ell - 1
///   sigmaInf(x) = -x - ell - 1
PrimeCover build_prime_cover(std::uint64_t p);

// Affine map x -> scale * x + shift on F_p as a permutation.
Perm affine_perm(std::uint64_t p, std::uint64_t scale, std::uint64_t shift);

} // namespace hurwitz

#endif
