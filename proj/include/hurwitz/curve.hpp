#ifndef HURWITZ_CURVE_HPP
#define HURWITZ_CURVE_HPP

#include <complex>
#include <cstdlib>
#include <ostream>

#include "hurwitz/poly.hpp"

namespace hurwitz
{

/// A point of y^2 = x^3 - x over the function field Q(i)(x, y), written
/// (X, Yfactor * y) with X and Yfactor rational in x alone. Images of the
/// generic point (x, y) under endomorphisms have this shape.
struct CurvePoint
{
  bool infinity = true;
  RatQi X;
  RatQi Yfactor;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint generic() { return {false, RatQi::x(), RatQi(QiScalar(1))}; }
  static CurvePoint affine(RatQi X, RatQi Yfactor)
  {
    return {false, std::move(X), std::move(Yfactor)};
  }

  // Yfactor^2 (x^3 - x) = X^3 - X
  bool on_curve() const;

  friend bool operator==(CurvePoint const &, CurvePoint const &) = default;
};

// x^3 - x
PolyQi curve_cubic();

CurvePoint ec_negate(CurvePoint const &p);
CurvePoint ec_add(CurvePoint const &p, CurvePoint const &q);
CurvePoint ec_multiply(CurvePoint const &p, long n);

// (X, Y) -> (-X, iY), the order-4 automorphism fixing infinity.
CurvePoint apply_iota(CurvePoint const &p);

// The coordinate functions of P -> P∘(x -> -x, y -> iy), i.e. phi∘iota.
CurvePoint precompose_iota(CurvePoint const &p);

/// [a](x, y) + [b] iota(x, y), multiplication by a + bi.
CurvePoint endomorphism(long a, long b);

// max(deg num X, deg den X); 1 for the identity.
long map_degree(CurvePoint const &p);

std::ostream &operator<<(std::ostream &os, CurvePoint const &p);

/// Affine point over a concrete field (Q(i) or floating complex numbers)
/// on y^2 = x^3 - x, with the chord-tangent law written out for that field.
template <class Field>
struct FieldPoint
{
  bool infinity = true;
  Field x{};
  Field y{};

  static FieldPoint at_infinity() { return {}; }
  static FieldPoint of(Field x, Field y) { return {false, std::move(x), std::move(y)}; }

  bool operator==(FieldPoint const &) const = default;
};

template <class Field>
FieldPoint<Field> field_add(FieldPoint<Field> const &p, FieldPoint<Field> const &q)
{
  if (p.infinity)
    return q;
  if (q.infinity)
    return p;
  Field slope;
  if (p.x == q.x) {
    if (p.y == -q.y)
      return FieldPoint<Field>::at_infinity();
    slope = (Field(3) * p.x * p.x - Field(1)) / (Field(2) * p.y);
  } else {
    slope = (q.y - p.y) / (q.x - p.x);
  }
  Field x3 = slope * slope - p.x - q.x;
  Field y3 = slope * (p.x - x3) - p.y;
  return FieldPoint<Field>::of(std::move(x3), std::move(y3));
}

template <class Field>
FieldPoint<Field> field_negate(FieldPoint<Field> const &p)
{
  if (p.infinity)
    return p;
  return FieldPoint<Field>::of(p.x, -p.y);
}

// n P by n - 1 successive additions of P.
template <class Field>
FieldPoint<Field> field_repeated_add(FieldPoint<Field> const &p, long n)
{
  auto base = n < 0 ? field_negate(p) : p;
  auto out = FieldPoint<Field>::at_infinity();
  for (long i = 0; i < std::labs(n); ++i)
    out = field_add(out, base);
  return out;
}

using ExactPoint = FieldPoint<QiScalar>;
using FloatPoint = FieldPoint<std::complex<double>>;

bool on_curve(ExactPoint const &p);

} // namespace hurwitz

#endif
