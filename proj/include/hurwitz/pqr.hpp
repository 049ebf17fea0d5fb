#ifndef HURWITZ_PQR_HPP
#define HURWITZ_PQR_HPP

#include <cstddef>
#include <stdexcept>

#include "hurwitz/curve.hpp"

namespace hurwitz
{

class NoSolution : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NonUniqueSolution : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NotAPerfectSquare : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NotAPerfectFourthPower : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class AllSamplesDegenerate : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// t(x) = 4x^2 / (x^2 + 1)^2, the degree-8 quotient by
// <iota, translation by (0,0), negation> in Weierstrass coordinates.
RatQi invariant_t();

// With u = (1+i)x/y and v = i + 2ix/y^2: v^2 = u^4 - 1 and u^4/v^2 = t(x),
// both exactly, after eliminating y^2 = x^3 - x.
bool model_identities_hold();

/// The rational function Z with Z(t(x)) = t(X(x)) for the odd-degree
/// endomorphism image `endo` of map degree d.
RatQi z_function(CurvePoint const &endo, long d);
RatQi z_function(long a, long b);

/// c_P t P^4 = c_Q (t - 1) Q^4 + R^2 with deg P = deg Q = k, deg R = 2k.
struct TriplePQR
{
  PolyQi P;
  PolyQi Q;
  PolyQi R;
  std::size_t k = 0;
  QiScalar cP{1};
  QiScalar cQ{1};

  bool operator==(TriplePQR const &) const = default;
};

TriplePQR extract_pqr(RatQi const &Z, std::size_t k);

struct PqrReport
{
  bool identity = false;
  bool squarefree = false;     // t (t-1) P Q R
  bool coprime = false;        // tP, (t-1)Q, R pairwise
  bool degrees = false;        // (k, k, 2k)
  long max_term_degree = 0;
  long distinct_roots = 0;     // of the product of the three terms
  bool extremal = false;       // max_term_degree = distinct_roots - 1

  bool all() const { return identity && squarefree && coprime && degrees && extremal; }
};

PqrReport verify_pqr(TriplePQR const &T);

struct CoverMapData
{
  long a = 0;
  long b = 0;
  long d = 0;
  std::size_t k = 0;
  CurvePoint endo;
  RatQi Z;
  TriplePQR triple;
};

// Throws std::invalid_argument unless a^2 + b^2 is odd.
CoverMapData build_cover_map(long a, long b);

inline constexpr double crosscheck_tolerance = 1e-9;

// |u - v| / max(|u|, |v|, 1)
double relative_error(std::complex<double> u, std::complex<double> v);

/// Max error of the symbolic endomorphism against successive floating
/// additions, at `samples` fixed non-real points.
double endomorphism_crosscheck(CurvePoint const &endo, long a, long b,
                               std::size_t samples);

/// Adds the comparison of Z(t(x0)) with t(X(x0)) to the check above.
double numeric_crosscheck(CoverMapData const &data, std::size_t samples);
double numeric_crosscheck(long a, long b, std::size_t samples);

} // namespace hurwitz

#endif
