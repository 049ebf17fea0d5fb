#include "hurwitz/poly.hpp"

#include <stdexcept>

namespace hurwitz
{

PolyQi::PolyQi(std::vector<QiScalar> coeffs) : _coeffs(std::move(coeffs))
{
  trim();
}

PolyQi::PolyQi(std::initializer_list<QiScalar> coeffs) : _coeffs(coeffs)
{
  trim();
}

PolyQi::PolyQi(QiScalar constant)
{
  if (!constant.is_zero())
    _coeffs.push_back(std::move(constant));
}

PolyQi PolyQi::monomial(QiScalar c, std::size_t degree)
{
  std::vector<QiScalar> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return PolyQi(std::move(coeffs));
}

void PolyQi::trim()
{
  while (!_coeffs.empty() && _coeffs.back().is_zero())
    _coeffs.pop_back();
}

QiScalar PolyQi::coeff(std::size_t i) const
{
  return i < _coeffs.size() ? _coeffs[i] : QiScalar();
}

PolyQi PolyQi::monic() const
{
  if (is_zero() || leading().is_one())
    return *this;
  return *this * leading().inverse();
}

PolyQi PolyQi::derivative() const
{
  std::vector<QiScalar> out;
  for (std::size_t i = 1; i < _coeffs.size(); ++i)
    out.push_back(_coeffs[i] * QiScalar(static_cast<long>(i)));
  return PolyQi(std::move(out));
}

PolyQi PolyQi::reflected() const
{
  auto out = *this;
  for (std::size_t i = 1; i < out._coeffs.size(); i += 2)
    out._coeffs[i] = -out._coeffs[i];
  return out;
}

PolyQi PolyQi::conjugated() const
{
  auto out = *this;
  for (auto &c : out._coeffs)
    c = c.conj();
  return out;
}

QiScalar PolyQi::operator()(QiScalar const &x) const
{
  QiScalar acc;
  for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::complex<double> PolyQi::operator()(std::complex<double> x) const
{
  std::complex<double> acc = 0;
  for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it)
    acc = acc * x + it->to_complex();
  return acc;
}

PolyQi &PolyQi::operator+=(PolyQi const &o)
{
  if (o._coeffs.size() > _coeffs.size())
    _coeffs.resize(o._coeffs.size());
  for (std::size_t i = 0; i < o._coeffs.size(); ++i)
    _coeffs[i] += o._coeffs[i];
  trim();
  return *this;
}

PolyQi &PolyQi::operator-=(PolyQi const &o)
{
  if (o._coeffs.size() > _coeffs.size())
    _coeffs.resize(o._coeffs.size());
  for (std::size_t i = 0; i < o._coeffs.size(); ++i)
    _coeffs[i] -= o._coeffs[i];
  trim();
  return *this;
}

PolyQi operator*(PolyQi const &a, PolyQi const &b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<QiScalar> out(a._coeffs.size() + b._coeffs.size() - 1);
  for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
    if (a._coeffs[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b._coeffs.size(); ++j)
      out[i + j] += a._coeffs[i] * b._coeffs[j];
  }
  return PolyQi(std::move(out));
}

PolyQi &PolyQi::operator*=(PolyQi const &o)
{
  return *this = *this * o;
}

PolyQi &PolyQi::operator*=(QiScalar const &c)
{
  if (c.is_zero()) {
    _coeffs.clear();
    return *this;
  }
  for (auto &x : _coeffs)
    x *= c;
  return *this;
}

PolyQi operator-(PolyQi a)
{
  for (auto &c : a._coeffs)
    c = -c;
  return a;
}

PolyQi pow(PolyQi const &base, unsigned exponent)
{
  PolyQi out(QiScalar(1));
  PolyQi b = base;
  while (exponent) {
    if (exponent & 1u)
      out *= b;
    exponent >>= 1u;
    if (exponent)
      b *= b;
  }
  return out;
}

std::pair<PolyQi, PolyQi> divmod(PolyQi const &num, PolyQi const &den)
{
  if (den.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree())
    return {PolyQi(), num};

  auto rem = num.coeffs();
  auto const &dc = den.coeffs();
  auto const lead_inv = den.leading().inverse();
  auto const dd = static_cast<std::size_t>(den.degree());
  std::vector<QiScalar> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    auto q = rem[k + dd] * lead_inv;
    if (!q.is_zero()) {
      for (std::size_t j = 0; j <= dd; ++j)
        rem[k + j] -= q * dc[j];
    }
    quot[k] = std::move(q);
  }
  rem.resize(dd);
  return {PolyQi(std::move(quot)), PolyQi(std::move(rem))};
}

PolyQi exact_div(PolyQi const &num, PolyQi const &den)
{
  auto [q, r] = divmod(num, den);
  if (!r.is_zero())
    throw std::domain_error("polynomial division is not exact");
  return q;
}

PolyQi gcd(PolyQi const &a, PolyQi const &b)
{
  PolyQi x = a.monic();
  PolyQi y = b.monic();
  while (!y.is_zero()) {
    auto r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool is_squarefree(PolyQi const &p)
{
  return gcd(p, p.derivative()).is_constant();
}

PolyQi radical(PolyQi const &p)
{
  if (p.is_zero())
    return p;
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

std::vector<std::pair<PolyQi, unsigned>> squarefree_decomposition(PolyQi const &p)
{
  std::vector<std::pair<PolyQi, unsigned>> out;
  if (p.is_constant())
    return out;
  auto const f = p.monic();
  auto const df = f.derivative();
  auto a = gcd(f, df);
  auto b = exact_div(f, a);
  auto c = exact_div(df, a);
  auto d = c - b.derivative();
  for (unsigned m = 1; !b.is_constant(); ++m) {
    a = gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    if (!a.is_constant())
      out.emplace_back(a, m);
  }
  return out;
}

std::optional<PolyQi> monic_root(PolyQi const &p, unsigned n)
{
  if (p.is_zero() || !p.leading().is_one())
    return std::nullopt;
  PolyQi root(QiScalar(1));
  for (auto const &[factor, m] : squarefree_decomposition(p)) {
    if (m % n != 0)
      return std::nullopt;
    root *= pow(factor, m / n);
  }
  return root;
}

PolyQi compose(PolyQi const &p, PolyQi const &q)
{
  PolyQi acc;
  auto const &c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * q + PolyQi(*it);
  return acc;
}

std::ostream &operator<<(std::ostream &os, PolyQi const &p)
{
  if (p.is_zero())
    return os << "0";
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    auto const &c = p.coeffs()[i];
    if (c.is_zero())
      continue;
    if (!first)
      os << " + ";
    first = false;
    os << c;
    if (i > 0)
      os << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os;
}

RatQi::RatQi(PolyQi num, PolyQi den) : _num(std::move(num)), _den(std::move(den))
{
  if (_den.is_zero())
    throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatQi::normalize()
{
  if (_num.is_zero()) {
    _den = PolyQi(QiScalar(1));
    return;
  }
  if (!_den.is_constant()) {
    auto g = gcd(_num, _den);
    if (!g.is_constant()) {
      _num = exact_div(_num, g);
      _den = exact_div(_den, g);
    }
  }
  if (!_den.leading().is_one()) {
    auto const inv = _den.leading().inverse();
    _num *= inv;
    _den *= inv;
  }
}

long RatQi::map_degree() const
{
  return std::max({_num.degree(), _den.degree(), 0L});
}

RatQi RatQi::inverse() const
{
  return {_den, _num};
}

RatQi RatQi::reflected() const
{
  return {_num.reflected(), _den.reflected()};
}

QiScalar RatQi::operator()(QiScalar const &x) const
{
  return _num(x) / _den(x);
}

std::complex<double> RatQi::operator()(std::complex<double> x) const
{
  return _num(x) / _den(x);
}

RatQi &RatQi::operator+=(RatQi const &o)
{
  if (_den == o._den) {
    _num += o._num;
  } else {
    _num = _num * o._den + o._num * _den;
    _den = _den * o._den;
  }
  normalize();
  return *this;
}

RatQi &RatQi::operator-=(RatQi const &o)
{
  return *this += -o;
}

RatQi &RatQi::operator*=(RatQi const &o)
{
  // Cross-cancel first to keep the gcd inputs small.
  auto g1 = gcd(_num, o._den);
  auto g2 = gcd(o._num, _den);
  auto n1 = g1.is_constant() ? _num : exact_div(_num, g1);
  auto d2 = g1.is_constant() ? o._den : exact_div(o._den, g1);
  auto n2 = g2.is_constant() ? o._num : exact_div(o._num, g2);
  auto d1 = g2.is_constant() ? _den : exact_div(_den, g2);
  _num = n1 * n2;
  _den = d1 * d2;
  normalize();
  return *this;
}

RatQi &RatQi::operator/=(RatQi const &o)
{
  if (o.is_zero())
    throw std::domain_error("rational function division by zero");
  return *this *= o.inverse();
}

RatQi operator-(RatQi a)
{
  a._num = -a._num;
  return a;
}

RatQi pow(RatQi const &base, unsigned exponent)
{
  return {pow(base.num(), exponent), pow(base.den(), exponent)};
}

RatQi compose(RatQi const &f, RatQi const &g)
{
  // f = N/D, m = max degree: f(g) = sum n_j gn^j gd^(m-j) / sum d_j gn^j gd^(m-j)
  auto const m = static_cast<std::size_t>(f.map_degree());
  std::vector<PolyQi> num_pows{PolyQi(QiScalar(1))};
  std::vector<PolyQi> den_pows{PolyQi(QiScalar(1))};
  for (std::size_t j = 1; j <= m; ++j) {
    num_pows.push_back(num_pows.back() * g.num());
    den_pows.push_back(den_pows.back() * g.den());
  }
  PolyQi top, bottom;
  for (std::size_t j = 0; j <= m; ++j) {
    auto const basis = num_pows[j] * den_pows[m - j];
    top += basis * f.num().coeff(j);
    bottom += basis * f.den().coeff(j);
  }
  return {top, bottom};
}

std::ostream &operator<<(std::ostream &os, RatQi const &f)
{
  os << "(" << f.num() << ")";
  if (!(f.den() == PolyQi(QiScalar(1))))
    os << " / (" << f.den() << ")";
  return os;
}

} // namespace hurwitz
