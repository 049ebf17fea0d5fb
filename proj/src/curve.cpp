#include "hurwitz/curve.hpp"

#include <stdexcept>

namespace hurwitz
{

PolyQi curve_cubic()
{
  return PolyQi{0, -1, 0, 1};
}

bool CurvePoint::on_curve() const
{
  if (infinity)
    return true;
  return Yfactor * Yfactor * RatQi(curve_cubic()) == X * X * X - X;
}

CurvePoint ec_negate(CurvePoint const &p)
{
  if (p.infinity)
    return p;
  return CurvePoint::affine(p.X, -p.Yfactor);
}

CurvePoint ec_add(CurvePoint const &p, CurvePoint const &q)
{
  if (p.infinity)
    return q;
  if (q.infinity)
    return p;

  // slope = M * y with M rational in x
  RatQi M;
  if (p.X == q.X) {
    if (p.Yfactor == -q.Yfactor)
      return CurvePoint::at_infinity();
    // (3X^2 - 1) / (2 Yf y) = (3X^2 - 1) / (2 Yf (x^3 - x)) * y
    M = (RatQi(QiScalar(3)) * p.X * p.X - RatQi(QiScalar(1))) /
        (RatQi(QiScalar(2)) * p.Yfactor * RatQi(curve_cubic()));
  } else {
    M = (q.Yfactor - p.Yfactor) / (q.X - p.X);
  }
  auto X3 = M * M * RatQi(curve_cubic()) - p.X - q.X;
  auto Y3 = M * (p.X - X3) - p.Yfactor;
  return CurvePoint::affine(std::move(X3), std::move(Y3));
}

CurvePoint ec_multiply(CurvePoint const &p, long n)
{
  auto base = n < 0 ? ec_negate(p) : p;
  unsigned long m = static_cast<unsigned long>(std::labs(n));
  auto out = CurvePoint::at_infinity();
  while (m) {
    if (m & 1ul)
      out = ec_add(out, base);
    m >>= 1u;
    if (m)
      base = ec_add(base, base);
  }
  return out;
}

CurvePoint apply_iota(CurvePoint const &p)
{
  if (p.infinity)
    return p;
  return CurvePoint::affine(-p.X, RatQi(QiScalar::i()) * p.Yfactor);
}

CurvePoint precompose_iota(CurvePoint const &p)
{
  if (p.infinity)
    return p;
  return CurvePoint::affine(p.X.reflected(),
                            RatQi(QiScalar::i()) * p.Yfactor.reflected());
}

CurvePoint endomorphism(long a, long b)
{
  if (a == 0 && b == 0)
    throw std::invalid_argument("endomorphism: zero multiplier");
  auto const g = CurvePoint::generic();
  return ec_add(ec_multiply(g, a), ec_multiply(apply_iota(g), b));
}

long map_degree(CurvePoint const &p)
{
  if (p.infinity)
    return 0;
  return p.X.map_degree();
}

std::ostream &operator<<(std::ostream &os, CurvePoint const &p)
{
  if (p.infinity)
    return os << "O";
  return os << "(X = " << p.X << ", Y = [" << p.Yfactor << "] y)";
}

bool on_curve(ExactPoint const &p)
{
  if (p.infinity)
    return true;
  return p.y * p.y == p.x * p.x * p.x - p.x;
}

} // namespace hurwitz
