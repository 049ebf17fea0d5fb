#ifndef HURWITZ_GALOIS_HPP
#define HURWITZ_GALOIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz
{

/// A point of C/Z[i] with exact rational coordinates reduced into [0, 1).
class TorusPoint
{
public:
  TorusPoint() = default;
  TorusPoint(Rational re, Rational im);

  Rational const &re() const { return _re; }
  Rational const &im() const { return _im; }

  // Multiplication by i^exponent, well defined since Z[i] is i-stable.
  TorusPoint rotated(int exponent) const;

  friend TorusPoint operator+(TorusPoint const &a, TorusPoint const &b);
  friend TorusPoint operator-(TorusPoint const &a);
  friend bool operator==(TorusPoint const &a, TorusPoint const &b);
  friend bool operator<(TorusPoint const &a, TorusPoint const &b);

  bool is_zero() const { return _re == 0 && _im == 0; }

private:
  Rational _re{0};
  Rational _im{0};
};

// (1 + i) / 2, the 2-torsion point fixed by the order-4 rotation.
TorusPoint torus_delta();

/// p -> i^rotation p + offset on C/Z[i].
struct TorusAffineMap
{
  int rotation = 0;
  TorusPoint offset;

  TorusAffineMap() = default;
  TorusAffineMap(int rot, TorusPoint c);

  bool is_translation() const { return rotation == 0; }

  friend bool operator==(TorusAffineMap const &a, TorusAffineMap const &b)
  {
    return a.rotation == b.rotation && a.offset == b.offset;
  }
  friend bool operator<(TorusAffineMap const &a, TorusAffineMap const &b);
};

// Apply g2 first.
TorusAffineMap torus_compose(TorusAffineMap const &g1, TorusAffineMap const &g2);
TorusAffineMap torus_inverse(TorusAffineMap const &g);

TorusAffineMap torus_alpha(); // p -> ip
TorusAffineMap torus_beta();  // p -> delta - p
TorusAffineMap torus_translation(TorusPoint c);

/// {lambda / (a + bi) mod Z[i]}, one point per residue class, sorted.
std::vector<TorusPoint> kernel_points(long a, long b);

/// Closure of alpha, beta and the kernel translations, sorted. Throws
/// EvenNorm unless a^2 + b^2 is odd.
std::vector<TorusAffineMap> build_galois_group(long a, long b);

struct GaloisReport
{
  long d = 0;
  std::size_t group_order = 0;
  std::size_t translation_order = 0;
  bool gamma_is_delta_translation = false;
  bool gamma_central = false;
  bool translations_match = false; // = <delta> + Ker as a set
  bool linear_part_surjective = false;
  bool kernel_is_translations = false;
  std::size_t quotient_order = 0;  // |Gamma / <gamma>|
  std::optional<std::size_t> lattice_group_order;
  bool quotient_matches_lattice = false;

  bool all() const;
};

GaloisReport structure_checks(long a, long b);

// (a + bi) delta - delta lies in Z[i]. Throws on (0, 0).
bool commutation_check(long a, long b);

} // namespace hurwitz

#endif
