#ifndef HURWITZ_QI_HPP
#define HURWITZ_QI_HPP

#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "hurwitz/numeric.hpp"

namespace hurwitz
{

/// An element re + im*i of Q(i).
class QiScalar
{
public:
  QiScalar() = default;
  QiScalar(Rational re, Rational im = 0) : _re(std::move(re)), _im(std::move(im)) {}
  QiScalar(long re, long im = 0) : _re(re), _im(im) {}
  QiScalar(int re, int im = 0) : _re(re), _im(im) {}

  static QiScalar i() { return {0, 1}; }

  Rational const &re() const { return _re; }
  Rational const &im() const { return _im; }

  bool is_zero() const { return _re == 0 && _im == 0; }
  bool is_one() const { return _re == 1 && _im == 0; }
  QiScalar conj() const { return {_re, -_im}; }
  Rational norm() const { return _re * _re + _im * _im; }
  // Throws std::domain_error on zero.
  QiScalar inverse() const;

  std::complex<double> to_complex() const { return {_re.get_d(), _im.get_d()}; }

  QiScalar &operator+=(QiScalar const &o);
  QiScalar &operator-=(QiScalar const &o);
  QiScalar &operator*=(QiScalar const &o);
  QiScalar &operator/=(QiScalar const &o) { return *this *= o.inverse(); }

  friend QiScalar operator+(QiScalar a, QiScalar const &b) { return a += b; }
  friend QiScalar operator-(QiScalar a, QiScalar const &b) { return a -= b; }
  friend QiScalar operator*(QiScalar a, QiScalar const &b) { return a *= b; }
  friend QiScalar operator/(QiScalar a, QiScalar const &b) { return a /= b; }
  friend QiScalar operator-(QiScalar const &a) { return {-a._re, -a._im}; }
  friend bool operator==(QiScalar const &a, QiScalar const &b)
  {
    return a._re == b._re && a._im == b._im;
  }

private:
  Rational _re{0};
  Rational _im{0};
};

QiScalar pow(QiScalar base, unsigned exponent);

// A square root inside Q(i), if one exists.
std::optional<QiScalar> sqrt_qi(QiScalar const &c);
// A fourth root inside Q(i), if one exists.
std::optional<QiScalar> fourth_root_qi(QiScalar const &c);

// "re" and "im" as exact rational strings.
std::string to_string(QiScalar const &c);
std::ostream &operator<<(std::ostream &os, QiScalar const &c);

} // namespace hurwitz

#endif
