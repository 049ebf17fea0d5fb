#ifndef HURWITZ_LATTICE_COVER_HPP
#define HURWITZ_LATTICE_COVER_HPP

#include <cstddef>
#include <stdexcept>

#include "hurwitz/certificate.hpp"
#include "hurwitz/gaussian.hpp"

namespace hurwitz
{

class EvenNorm : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// z -> i^rotation z + shift, an orientation-preserving motion of the plane
/// preserving Z[i].
struct AffineLatticeMap
{
  int rotation = 0; // exponent of i, kept in [0, 4)
  GaussInt shift;

  AffineLatticeMap() = default;
  AffineLatticeMap(int rot, GaussInt lambda);

  GaussInt unit() const { return GaussInt::unit(rotation); }
  GaussInt operator()(GaussInt const &z) const { return unit() * z + shift; }
  bool is_identity() const { return rotation == 0 && shift.is_zero(); }
  bool is_translation() const { return rotation == 0; }

  static AffineLatticeMap identity() { return {}; }
  static AffineLatticeMap translation(GaussInt lambda) { return {0, std::move(lambda)}; }

  friend bool operator==(AffineLatticeMap const &a, AffineLatticeMap const &b)
  {
    return a.rotation == b.rotation && a.shift == b.shift;
  }
};

// Apply g2 first: (u1 u2, u1 lambda2 + lambda1).
AffineLatticeMap affine_compose(AffineLatticeMap const &g1,
                                AffineLatticeMap const &g2);
AffineLatticeMap affine_inverse(AffineLatticeMap const &g);
AffineLatticeMap affine_power(AffineLatticeMap const &g, unsigned n);

// c0(z) = iz, c1(z) = 1 + iz, cInf(z) = -z + i.
AffineLatticeMap lattice_c0();
AffineLatticeMap lattice_c1();
AffineLatticeMap lattice_c_inf();

/// The permutation mu -> u mu + lambda of the residues mod the modulus.
/// A homomorphism from the affine group to S_d.
Perm coset_action(AffineLatticeMap const &g, ResidueSystem const &residues);

struct LatticeCover
{
  ResidueSystem residues;
  CoverCertificate certificate;
};

LatticeCover build_lattice_cover(long a, long b);

struct UniversalRelationsReport
{
  bool orders = false;       // c0^4 = c1^4 = cInf^2 = 1
  bool product = false;      // c0 c1 = cInf
  bool translations = false; // c0^3 c1 and c0 c1^3 have trivial rotation
  bool commute = false;
  bool generate_lattice = false; // |det| of the translation parts is 1
  GaussInt u_shift;
  GaussInt v_shift;

  bool all() const
  {
    return orders && product && translations && commute && generate_lattice;
  }
};

UniversalRelationsReport universal_relations_check();

struct CommutatorReport
{
  GaussInt translation;        // shift of c0 c1 c0^-1 c1^-1
  std::size_t additive_order = 0; // of the translation mod (a + bi)
  std::size_t perm_order = 0;
  CycleType type;
  bool fixed_point_free = false;
  bool order_matches = false;  // every cycle has the additive order
  bool prime_cycle = false;    // for prime d, a single d-cycle

  bool consistent(std::size_t d) const;
};

CommutatorReport commutator_translation(long a, long b);

} // namespace hurwitz

#endif
