#include "hurwitz/gaussian.hpp"

#include <limits>
#include <regex>

namespace hurwitz
{

GaussInt GaussInt::unit(int exponent)
{
  switch (((exponent % 4) + 4) % 4) {
  case 0:
    return {1, 0};
  case 1:
    return {0, 1};
  case 2:
    return {-1, 0};
  default:
    return {0, -1};
  }
}

GaussInt &GaussInt::operator+=(GaussInt const &o)
{
  re += o.re;
  im += o.im;
  return *this;
}

GaussInt &GaussInt::operator-=(GaussInt const &o)
{
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussInt &GaussInt::operator*=(GaussInt const &o)
{
  Integer r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Integer norm(GaussInt const &z)
{
  return z.re * z.re + z.im * z.im;
}

bool divides(GaussInt const &beta, GaussInt const &lambda)
{
  if (beta.is_zero())
    throw ZeroModulus("divides: zero modulus");
  auto const n = norm(beta);
  auto const w = lambda * beta.conj();
  return mpz_divisible_p(w.re.get_mpz_t(), n.get_mpz_t()) &&
         mpz_divisible_p(w.im.get_mpz_t(), n.get_mpz_t());
}

std::string to_string(GaussInt const &z)
{
  std::string s = z.re.get_str();
  if (z.im < 0)
    s += "-" + Integer(-z.im).get_str();
  else
    s += "+" + z.im.get_str();
  return s + "i";
}

GaussInt parse_gauss(std::string const &text)
{
  static std::regex const pattern(R"(^([+-]?\d+)([+-]\d+)i$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw std::invalid_argument("malformed Gaussian integer '" + text + "'");
  // mpz_set_str rejects an explicit '+'.
  auto const part = [](std::string s) {
    if (s.front() == '+')
      s.erase(0, 1);
    return Integer(s);
  };
  return {part(m[1].str()), part(m[2].str())};
}

std::ostream &operator<<(std::ostream &os, GaussInt const &z)
{
  return os << to_string(z);
}

namespace
{

std::size_t to_size(Integer const &z)
{
  if (z < 0 || z > std::numeric_limits<std::uint32_t>::max())
    throw std::overflow_error("residue system too large");
  return z.get_ui();
}

} // namespace

ResidueSystem::ResidueSystem(GaussInt beta) : _modulus(std::move(beta))
{
  if (_modulus.is_zero())
    throw ZeroModulus("residue_system: zero modulus");

  auto const &a = _modulus.re;
  auto const &b = _modulus.im;
  auto const n = norm(_modulus);

  // The ideal is spanned by the rows (a, b) and (-b, a). With
  // g = s*a + u*(-b), the row s*(a,b) + u*(-b,a) = (g, s*b + u*a) and the
  // row (b/g)(a,b) + (a/g)(-b,a) = (0, n/g) form a Hermite basis.
  Integer s, u;
  Integer minus_b = -b;
  mpz_gcdext(_col.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(),
             minus_b.get_mpz_t());
  _row = n / _col;
  _shear = s * b + u * a;
  mpz_fdiv_r(_shear.get_mpz_t(), _shear.get_mpz_t(), _row.get_mpz_t());

  auto const count = to_size(n);
  _index_of_key.assign(count, std::numeric_limits<std::uint32_t>::max());
  _reps.reserve(count);

  // d*1 and d*i lie in the ideal, so the d x d box meets every class.
  for (std::size_t y = 0; y < count && _reps.size() < count; ++y) {
    for (std::size_t x = 0; x < count && _reps.size() < count; ++x) {
      GaussInt lambda(Integer(static_cast<unsigned long>(x)),
                      Integer(static_cast<unsigned long>(y)));
      auto k = key(lambda);
      if (_index_of_key[k] == std::numeric_limits<std::uint32_t>::max()) {
        _index_of_key[k] = static_cast<std::uint32_t>(_reps.size());
        _reps.push_back(std::move(lambda));
      }
    }
  }
}

std::size_t ResidueSystem::key(GaussInt const &lambda) const
{
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), lambda.re.get_mpz_t(), _col.get_mpz_t());
  Integer x = lambda.re - q * _col;
  Integer y = lambda.im - q * _shear;
  mpz_fdiv_r(y.get_mpz_t(), y.get_mpz_t(), _row.get_mpz_t());
  return to_size(x * _row + y);
}

std::size_t ResidueSystem::reduce(GaussInt const &lambda) const
{
  return _index_of_key[key(lambda)];
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
sum_two_squares(std::uint64_t d)
{
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  Integer const target(std::to_string(d));
  Integer x = 0;
  Integer root, rem;
  for (; x * x <= target; ++x) {
    Integer const slack = target - x * x;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), slack.get_mpz_t());
    if (rem == 0 && root <= x)
      out.emplace_back(x.get_ui(), root.get_ui());
  }
  return out;
}

} // namespace hurwitz
