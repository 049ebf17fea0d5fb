#ifndef HURWITZ_NUMERIC_HPP
#define HURWITZ_NUMERIC_HPP

#include <string>

#include <gmpxx.h>

namespace hurwitz
{

using Integer = mpz_class;
using Rational = mpq_class;

// num / den in lowest terms; den must be nonzero.
inline Rational make_rational(Integer const &num, Integer const &den)
{
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is one.
inline std::string to_string(Rational const &q)
{
  return q.get_str();
}

inline std::string to_string(Integer const &z)
{
  return z.get_str();
}

// Accepts "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string const &text);

} // namespace hurwitz

#endif
