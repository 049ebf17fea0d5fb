#ifndef HURWITZ_CERTIFICATE_HPP
#define HURWITZ_CERTIFICATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hurwitz/perm.hpp"

namespace hurwitz
{

enum class Provenance { Prime, Lattice, Search, Manual };

std::string_view to_string(Provenance p);
// Throws std::invalid_argument for unknown names.
Provenance parse_provenance(std::string_view name);

/// A permutation triple offered as the monodromy of a degree d = 4k+1 cover
/// of the sphere branched over 0, 1 and infinity.
class CoverCertificate
{
public:
  // Throws DegreeMismatch when the permutations disagree in degree and
  // std::invalid_argument when d is not 1 mod 4.
  CoverCertificate(Perm sigma0, Perm sigma1, Perm sigma_inf,
                   Provenance provenance);

  std::size_t d() const { return _sigma0.degree(); }
  std::size_t k() const { return (d() - 1) / 4; }
  Perm const &sigma0() const { return _sigma0; }
  Perm const &sigma1() const { return _sigma1; }
  Perm const &sigma_inf() const { return _sigma_inf; }
  Provenance provenance() const { return _provenance; }

  bool operator==(CoverCertificate const &) const = default;

private:
  Perm _sigma0;
  Perm _sigma1;
  Perm _sigma_inf;
  Provenance _provenance;
};

struct VerificationReport
{
  bool product = false;          // sigma0 sigma1 = sigmaInf
  bool types = false;            // (1,4^k), (1,4^k), (1,2^2k)
  bool transitive = false;
  bool riemann_hurwitz = false;  // Euler characteristic 2, i.e. genus 0
  // Order of <sigma0, sigma1, sigmaInf>; nullopt when the closure cap was hit.
  std::optional<std::size_t> group_order;

  // Conditions (i)-(iv); the group order is informational.
  bool valid() const
  {
    return product && types && transitive && riemann_hurwitz;
  }
  bool order_is_4d(std::size_t d) const
  {
    return group_order && *group_order == 4 * d;
  }
  bool order_as_expected(std::size_t d) const;

  bool operator==(VerificationReport const &) const = default;
};

// Order of the monodromy group of a cover of degree d: 4d, except that a
// one-point fibre carries only the trivial group.
std::size_t expected_group_order(std::size_t d);

// Euler characteristic 2d - sum over fibres of (d - #cycles).
long euler_characteristic(CoverCertificate const &c);

VerificationReport verify_certificate(CoverCertificate const &c,
                                      std::size_t order_cap = default_order_cap);

} // namespace hurwitz

#endif
