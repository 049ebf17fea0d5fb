#include "hurwitz/qi.hpp"

#include <stdexcept>

namespace hurwitz
{

Rational parse_rational(std::string const &text)
{
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

QiScalar QiScalar::inverse() const
{
  auto const n = norm();
  if (n == 0)
    throw std::domain_error("QiScalar: inverse of zero");
  return {_re / n, -_im / n};
}

QiScalar &QiScalar::operator+=(QiScalar const &o)
{
  _re += o._re;
  _im += o._im;
  return *this;
}

QiScalar &QiScalar::operator-=(QiScalar const &o)
{
  _re -= o._re;
  _im -= o._im;
  return *this;
}

QiScalar &QiScalar::operator*=(QiScalar const &o)
{
  Rational r = _re * o._re - _im * o._im;
  _im = _re * o._im + _im * o._re;
  _re = std::move(r);
  return *this;
}

QiScalar pow(QiScalar base, unsigned exponent)
{
  QiScalar out(1);
  while (exponent) {
    if (exponent & 1u)
      out *= base;
    base *= base;
    exponent >>= 1u;
  }
  return out;
}

namespace
{

std::optional<Rational> sqrt_rational(Rational const &q)
{
  if (q < 0)
    return std::nullopt;
  auto const &num = q.get_num();
  auto const &den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

} // namespace

std::optional<QiScalar> sqrt_qi(QiScalar const &c)
{
  if (c.is_zero())
    return QiScalar();
  // (r + si)^2 = c  =>  r^2 = (re + |c|) / 2, s^2 = (|c| - re) / 2
  auto const modulus = sqrt_rational(c.norm());
  if (!modulus)
    return std::nullopt;
  auto const r = sqrt_rational((c.re() + *modulus) / 2);
  auto const s = sqrt_rational((*modulus - c.re()) / 2);
  if (!r || !s)
    return std::nullopt;
  for (int sign : {1, -1}) {
    QiScalar const cand(*r, sign * *s);
    if (cand * cand == c)
      return cand;
  }
  return std::nullopt;
}

std::optional<QiScalar> fourth_root_qi(QiScalar const &c)
{
  auto const s = sqrt_qi(c);
  if (!s)
    return std::nullopt;
  if (auto r = sqrt_qi(*s))
    return r;
  return sqrt_qi(-*s);
}

std::string to_string(QiScalar const &c)
{
  return "(" + c.re().get_str() + ")+(" + c.im().get_str() + ")i";
}

std::ostream &operator<<(std::ostream &os, QiScalar const &c)
{
  if (c.im() == 0)
    return os << c.re().get_str();
  if (c.re() == 0)
    return os << c.im().get_str() << "i";
  return os << to_string(c);
}

} // namespace hurwitz
