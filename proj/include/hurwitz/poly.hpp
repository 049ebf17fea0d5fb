#ifndef HURWITZ_POLY_HPP
#define HURWITZ_POLY_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "hurwitz/qi.hpp"

namespace hurwitz
{

/// Univariate polynomial over Q(i), coefficients stored constant term first
/// with no trailing zeros (the zero polynomial is empty).
class PolyQi
{
public:
  PolyQi() = default;
  explicit PolyQi(std::vector<QiScalar> coeffs);
  PolyQi(std::initializer_list<QiScalar> coeffs);
  PolyQi(QiScalar constant);

  static PolyQi x() { return PolyQi{0, 1}; }
  static PolyQi monomial(QiScalar c, std::size_t degree);

  bool is_zero() const { return _coeffs.empty(); }
  bool is_constant() const { return _coeffs.size() <= 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(_coeffs.size()) - 1; }
  QiScalar const &leading() const { return _coeffs.back(); }
  QiScalar coeff(std::size_t i) const;
  std::vector<QiScalar> const &coeffs() const { return _coeffs; }

  PolyQi monic() const;
  PolyQi derivative() const;
  // p(-x)
  PolyQi reflected() const;
  // p(x) with every coefficient conjugated.
  PolyQi conjugated() const;

  QiScalar operator()(QiScalar const &x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  PolyQi &operator+=(PolyQi const &o);
  PolyQi &operator-=(PolyQi const &o);
  PolyQi &operator*=(PolyQi const &o);
  PolyQi &operator*=(QiScalar const &c);

  friend PolyQi operator+(PolyQi a, PolyQi const &b) { return a += b; }
  friend PolyQi operator-(PolyQi a, PolyQi const &b) { return a -= b; }
  friend PolyQi operator*(PolyQi const &a, PolyQi const &b);
  friend PolyQi operator*(PolyQi a, QiScalar const &c) { return a *= c; }
  friend PolyQi operator*(QiScalar const &c, PolyQi a) { return a *= c; }
  friend PolyQi operator-(PolyQi a);
  friend bool operator==(PolyQi const &a, PolyQi const &b) = default;

private:
  void trim();

  std::vector<QiScalar> _coeffs;
};

PolyQi pow(PolyQi const &base, unsigned exponent);

// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<PolyQi, PolyQi> divmod(PolyQi const &num, PolyQi const &den);
// num / den, throwing std::domain_error unless the division is exact.
PolyQi exact_div(PolyQi const &num, PolyQi const &den);

// Monic gcd (zero when both inputs are zero).
PolyQi gcd(PolyQi const &a, PolyQi const &b);

bool is_squarefree(PolyQi const &p);
// Squarefree part (product of the distinct monic irreducible factors).
PolyQi radical(PolyQi const &p);

/// Yun's decomposition of a monic polynomial: pairs (f_m, m) with f_m
/// squarefree, pairwise coprime and p = prod f_m^m. Only nonconstant
/// factors are listed.
std::vector<std::pair<PolyQi, unsigned>> squarefree_decomposition(PolyQi const &p);

// Monic r with r^n = p for monic p, if it exists.
std::optional<PolyQi> monic_root(PolyQi const &p, unsigned n);

// p(q(x))
PolyQi compose(PolyQi const &p, PolyQi const &q);

std::ostream &operator<<(std::ostream &os, PolyQi const &p);

/// A rational function num/den over Q(i) in lowest terms with den monic.
class RatQi
{
public:
  RatQi() : _den(QiScalar(1)) {}
  RatQi(PolyQi p) : _num(std::move(p)), _den(QiScalar(1)) {}
  RatQi(QiScalar c) : RatQi(PolyQi(c)) {}
  // Throws std::domain_error on a zero denominator.
  RatQi(PolyQi num, PolyQi den);

  static RatQi x() { return RatQi(PolyQi::x()); }

  PolyQi const &num() const { return _num; }
  PolyQi const &den() const { return _den; }
  bool is_zero() const { return _num.is_zero(); }
  // max(deg num, deg den); 0 for constants.
  long map_degree() const;

  RatQi inverse() const;
  RatQi reflected() const;

  QiScalar operator()(QiScalar const &x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  RatQi &operator+=(RatQi const &o);
  RatQi &operator-=(RatQi const &o);
  RatQi &operator*=(RatQi const &o);
  RatQi &operator/=(RatQi const &o);

  friend RatQi operator+(RatQi a, RatQi const &b) { return a += b; }
  friend RatQi operator-(RatQi a, RatQi const &b) { return a -= b; }
  friend RatQi operator*(RatQi a, RatQi const &b) { return a *= b; }
  friend RatQi operator/(RatQi a, RatQi const &b) { return a /= b; }
  friend RatQi operator-(RatQi a);
  friend bool operator==(RatQi const &a, RatQi const &b) = default;

private:
  void normalize();

  PolyQi _num;
  PolyQi _den;
};

RatQi pow(RatQi const &base, unsigned exponent);
// f(g(x))
RatQi compose(RatQi const &f, RatQi const &g);

std::ostream &operator<<(std::ostream &os, RatQi const &f);

} // namespace hurwitz

#endif
