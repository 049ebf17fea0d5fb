#ifndef HURWITZ_GAUSSIAN_HPP
#define HURWITZ_GAUSSIAN_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz
{

class ZeroModulus : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// a + bi with unbounded integer parts.
struct GaussInt
{
  Integer re{0};
  Integer im{0};

  GaussInt() = default;
  GaussInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(long r, long i = 0) : re(r), im(i) {}
  GaussInt(int r, int i = 0) : re(r), im(i) {}

  // i^e for e taken mod 4.
  static GaussInt unit(int exponent);

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt conj() const { return {re, -im}; }

  GaussInt &operator+=(GaussInt const &o);
  GaussInt &operator-=(GaussInt const &o);
  GaussInt &operator*=(GaussInt const &o);

  friend GaussInt operator+(GaussInt a, GaussInt const &b) { return a += b; }
  friend GaussInt operator-(GaussInt a, GaussInt const &b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, GaussInt const &b) { return a *= b; }
  friend GaussInt operator-(GaussInt const &a) { return {-a.re, -a.im}; }
  friend bool operator==(GaussInt const &a, GaussInt const &b)
  {
    return a.re == b.re && a.im == b.im;
  }
};

Integer norm(GaussInt const &z);

// beta | lambda in Z[i]; throws ZeroModulus for beta = 0.
bool divides(GaussInt const &beta, GaussInt const &lambda);

// "a+bi" / "a-bi" with both parts always written, e.g. "2+1i", "0-1i".
std::string to_string(GaussInt const &z);
GaussInt parse_gauss(std::string const &text);
std::ostream &operator<<(std::ostream &os, GaussInt const &z);

/// Canonical representatives of Z[i]/(beta), the class of 0 first.
///
/// Classes are keyed through the Hermite basis (g, t), (0, N/g) of the
/// ideal viewed as a sublattice of Z^2, where g = gcd(re, im) and N is the
/// norm; the key is an integer in [0, N).
class ResidueSystem
{
public:
  // Throws ZeroModulus for beta = 0.
  explicit ResidueSystem(GaussInt beta);

  GaussInt const &modulus() const { return _modulus; }
  std::size_t size() const { return _reps.size(); }
  std::vector<GaussInt> const &reps() const { return _reps; }
  GaussInt const &rep(std::size_t index) const { return _reps[index]; }

  // Index of the representative congruent to lambda.
  std::size_t reduce(GaussInt const &lambda) const;

private:
  std::size_t key(GaussInt const &lambda) const;

  GaussInt _modulus;
  Integer _col;   // g
  Integer _shear; // t
  Integer _row;   // N / g
  std::vector<GaussInt> _reps;
  std::vector<std::uint32_t> _index_of_key;
};

// Free-function spelling of the two accessors above.
inline ResidueSystem residue_system(GaussInt const &beta)
{
  return ResidueSystem(beta);
}
inline std::size_t reduce(GaussInt const &lambda, ResidueSystem const &r)
{
  return r.reduce(lambda);
}

/// Every (x, y) with x >= y >= 0 and x^2 + y^2 = d, by exhaustive scan,
/// ordered by increasing x.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
sum_two_squares(std::uint64_t d);

} // namespace hurwitz

#endif
