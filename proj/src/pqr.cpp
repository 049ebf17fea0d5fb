#include "hurwitz/pqr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace hurwitz
{

RatQi invariant_t()
{
  PolyQi const x2p1{1, 0, 1};
  return {PolyQi{0, 0, 4}, x2p1 * x2p1};
}

bool model_identities_hold()
{
  auto const x = RatQi::x();
  auto const cubic = RatQi(curve_cubic());
  auto const i = RatQi(QiScalar::i());
  // u^4 = (1+i)^4 x^4 / y^4 = -4 x^4 / (x^3 - x)^2
  auto const u4 = RatQi(QiScalar(-4)) * pow(x, 4) / (cubic * cubic);
  // v = i + 2ix / y^2
  auto const v = i + RatQi(QiScalar(0, 2)) * x / cubic;
  auto const v2 = v * v;
  return v2 == u4 - RatQi(QiScalar(1)) && u4 / v2 == invariant_t();
}

namespace
{

using Row = std::vector<QiScalar>;

// Null space of an exact matrix, one basis vector per free column.
std::vector<Row> null_space(std::vector<Row> rows, std::size_t cols)
{
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c].is_zero())
      ++r;
    if (r == rows.size())
      continue;
    std::swap(rows[r], rows[rank]);
    auto const inv = rows[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      rows[rank][j] *= inv;
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other == rank || rows[other][c].is_zero())
        continue;
      auto const f = rows[other][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[rank][j].is_zero())
          rows[other][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col)
    is_pivot[c] = true;

  std::vector<Row> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    Row v(cols);
    v[f] = QiScalar(1);
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace

RatQi z_function(CurvePoint const &endo, long d)
{
  if (d % 2 == 0)
    throw std::invalid_argument("z_function: degree must be odd");
  if (endo.infinity || map_degree(endo) != d)
    throw std::invalid_argument("z_function: endomorphism of wrong degree");

  auto const t = invariant_t();
  auto const &Xn = endo.X.num();
  auto const &Xd = endo.X.den();
  // t(X) = 4 Xn^2 Xd^2 / (Xn^2 + Xd^2)^2
  auto const Fn = PolyQi(QiScalar(4)) * Xn * Xn * Xd * Xd;
  auto const sum = Xn * Xn + Xd * Xd;
  auto const Fd = sum * sum;

  // Unknowns n_0..n_d, e_0..e_d of Z = N/E; with B_j = tn^j td^(d-j):
  //   sum n_j B_j Fd - sum e_j B_j Fn = 0.
  auto const m = static_cast<std::size_t>(d);
  std::vector<PolyQi> tn_pows{PolyQi(QiScalar(1))};
  std::vector<PolyQi> td_pows{PolyQi(QiScalar(1))};
  for (std::size_t j = 1; j <= m; ++j) {
    tn_pows.push_back(tn_pows.back() * t.num());
    td_pows.push_back(td_pows.back() * t.den());
  }
  std::vector<PolyQi> columns;
  for (std::size_t j = 0; j <= m; ++j)
    columns.push_back(tn_pows[j] * td_pows[m - j] * Fd);
  for (std::size_t j = 0; j <= m; ++j)
    columns.push_back(-(tn_pows[j] * td_pows[m - j] * Fn));

  long max_deg = 0;
  for (auto const &c : columns)
    max_deg = std::max(max_deg, c.degree());

  std::vector<Row> rows;
  for (long e = 0; e <= max_deg; ++e) {
    Row row(columns.size());
    bool nonzero = false;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      row[c] = columns[c].coeff(static_cast<std::size_t>(e));
      nonzero = nonzero || !row[c].is_zero();
    }
    if (nonzero)
      rows.push_back(std::move(row));
  }

  auto const kernel = null_space(std::move(rows), columns.size());
  if (kernel.empty())
    throw NoSolution("z_function: t(X) is not a rational function of t");
  if (kernel.size() != 1)
    throw NonUniqueSolution("z_function: kernel of dimension " +
                            std::to_string(kernel.size()));

  auto const &v = kernel.front();
  PolyQi const N(std::vector<QiScalar>(v.begin(), v.begin() + m + 1));
  PolyQi const E(std::vector<QiScalar>(v.begin() + m + 1, v.end()));
  if (E.is_zero())
    throw NoSolution("z_function: zero denominator in solution");
  RatQi Z(N, E);

  if (Z.map_degree() != d || !(compose(Z, t) == compose(t, endo.X)))
    throw NoSolution("z_function: recomposition check failed");
  return Z;
}

RatQi z_function(long a, long b)
{
  return z_function(endomorphism(a, b), a * a + b * b);
}

TriplePQR extract_pqr(RatQi const &Z, std::size_t k)
{
  auto const &num = Z.num();
  auto const &den = Z.den();
  auto const top = static_cast<long>(4 * k + 1);
  if (num.degree() != top || den.degree() != top - 1)
    throw std::invalid_argument("extract_pqr: degree mismatch for k = " +
                                std::to_string(k));

  TriplePQR T;
  T.k = k;

  auto R = monic_root(den, 2);
  if (!R)
    throw NotAPerfectSquare("extract_pqr: denominator is not a square");
  T.R = std::move(*R);

  auto const tee = PolyQi::x();
  T.cP = num.leading();
  auto const tP4 = num.monic();
  if (!tP4.coeff(0).is_zero())
    throw NotAPerfectFourthPower("extract_pqr: numerator does not vanish at 0");
  auto P = monic_root(exact_div(tP4, tee), 4);
  if (!P)
    throw NotAPerfectFourthPower("extract_pqr: numerator / t is not a fourth power");
  T.P = std::move(*P);

  auto const rem = num - den;
  T.cQ = rem.leading();
  auto const t1Q4 = rem.monic();
  auto const [Q4, r] = divmod(t1Q4, tee - PolyQi(QiScalar(1)));
  if (!r.is_zero())
    throw NotAPerfectFourthPower("extract_pqr: Z - 1 does not vanish at 1");
  auto Q = monic_root(Q4, 4);
  if (!Q)
    throw NotAPerfectFourthPower("extract_pqr: (Z - 1) / (t - 1) is not a fourth power");
  T.Q = std::move(*Q);

  if (auto e = fourth_root_qi(T.cP)) {
    T.P *= *e;
    T.cP = QiScalar(1);
  }
  if (auto e = fourth_root_qi(T.cQ)) {
    T.Q *= *e;
    T.cQ = QiScalar(1);
  }
  return T;
}

PqrReport verify_pqr(TriplePQR const &T)
{
  PqrReport r;
  auto const t = PolyQi::x();
  auto const t1 = t - PolyQi(QiScalar(1));
  auto const A = T.cP * t * pow(T.P, 4);
  auto const B = T.cQ * t1 * pow(T.Q, 4);
  auto const C = T.R * T.R;
  r.identity = A == B + C;

  auto const product = t * t1 * T.P * T.Q * T.R;
  r.squarefree = !product.is_zero() && is_squarefree(product);

  auto const tP = t * T.P;
  auto const t1Q = t1 * T.Q;
  r.coprime = gcd(tP, t1Q).is_constant() && gcd(tP, T.R).is_constant() &&
              gcd(t1Q, T.R).is_constant();

  auto const k = static_cast<long>(T.k);
  r.degrees = T.P.degree() == k && T.Q.degree() == k && T.R.degree() == 2 * k;

  r.max_term_degree = std::max({A.degree(), B.degree(), C.degree()});
  auto const abc = A * B * C;
  r.distinct_roots = abc.is_zero() ? 0 : radical(abc).degree();
  r.extremal = r.max_term_degree == r.distinct_roots - 1;
  return r;
}

CoverMapData build_cover_map(long a, long b)
{
  CoverMapData data;
  data.a = a;
  data.b = b;
  data.d = a * a + b * b;
  if (data.d % 2 == 0)
    throw std::invalid_argument("build_cover_map: a^2 + b^2 must be odd");
  data.k = static_cast<std::size_t>((data.d - 1) / 4);
  data.endo = endomorphism(a, b);
  data.Z = z_function(data.endo, data.d);
  data.triple = extract_pqr(data.Z, data.k);
  return data;
}

double relative_error(std::complex<double> u, std::complex<double> v)
{
  return std::abs(u - v) / std::max({std::abs(u), std::abs(v), 1.0});
}

namespace
{

using cplx = std::complex<double>;

// Fixed non-real sample abscissae, away from 0, +-1, +-i.
std::array<cplx, 16> const sample_abscissae{{
    {0.31, 0.72},  {-1.23, 0.41}, {0.57, -1.32}, {2.11, 0.93},
    {-0.68, -0.59}, {1.47, 1.86}, {-2.04, 1.15}, {0.83, -0.27},
    {-0.39, 1.61}, {1.92, -0.74}, {-1.55, -1.21}, {0.24, 2.37},
    {2.63, -1.49}, {-0.91, 0.33}, {1.18, 0.52},  {-1.77, -0.46},
}};

bool near_special(cplx x)
{
  for (cplx s : {cplx(0, 0), cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)})
    if (std::abs(x - s) < 1e-3)
      return true;
  return false;
}

// Doubles are dyadic rationals, so symbolic results are evaluated exactly
// at the sample and rounded once; expanded high-degree forms lose too much
// to cancellation under floating Horner evaluation.
QiScalar exact_point(cplx x)
{
  return {Rational(x.real()), Rational(x.imag())};
}

std::optional<cplx> exact_value(RatQi const &f, QiScalar const &x)
{
  auto const den = f.den()(x);
  if (den.is_zero() || std::abs(den.to_complex()) < 1e-8)
    return std::nullopt;
  return (f.num()(x) / den).to_complex();
}

template <class Check>
double sample_max(std::size_t samples, Check check)
{
  double worst = 0;
  std::size_t used = 0;
  for (auto const &x0 : sample_abscissae) {
    if (used == samples)
      break;
    if (near_special(x0))
      continue;
    auto const err = check(x0);
    if (!err)
      continue;
    worst = std::max(worst, *err);
    ++used;
  }
  if (used == 0 && samples > 0)
    throw AllSamplesDegenerate("numeric crosscheck: every sample is degenerate");
  return worst;
}

std::optional<double> endo_error_at(CurvePoint const &endo, long a, long b, cplx x0)
{
  if (endo.infinity)
    return std::nullopt;
  auto const x = exact_point(x0);
  auto const X0 = exact_value(endo.X, x);
  auto const Y0 = exact_value(endo.Yfactor, x);
  if (!X0 || !Y0)
    return std::nullopt;
  cplx const y0 = std::sqrt(x0 * x0 * x0 - x0);
  auto const p = FloatPoint::of(x0, y0);
  auto const ip = FloatPoint::of(-x0, cplx(0, 1) * y0);
  auto const q = field_add(field_repeated_add(p, a), field_repeated_add(ip, b));
  if (q.infinity)
    return std::nullopt;
  return std::max(relative_error(*X0, q.x), relative_error(*Y0 * y0, q.y));
}

} // namespace

double endomorphism_crosscheck(CurvePoint const &endo, long a, long b,
                               std::size_t samples)
{
  return sample_max(samples, [&](cplx x0) { return endo_error_at(endo, a, b, x0); });
}

double numeric_crosscheck(CoverMapData const &data, std::size_t samples)
{
  auto const t = invariant_t();
  return sample_max(samples, [&](cplx x0) -> std::optional<double> {
    auto const e1 = endo_error_at(data.endo, data.a, data.b, x0);
    if (!e1)
      return std::nullopt;
    auto const x = exact_point(x0);
    auto const tx = t(x);
    auto const lhs = exact_value(data.Z, tx);
    auto const X0 = exact_value(data.endo.X, x);
    if (!lhs || !X0)
      return std::nullopt;
    // t applied in floating point to the rounded image
    auto const X2 = *X0 * *X0;
    auto const rhs = 4.0 * X2 / ((X2 + 1.0) * (X2 + 1.0));
    return std::max(*e1, relative_error(*lhs, rhs));
  });
}

double numeric_crosscheck(long a, long b, std::size_t samples)
{
  return numeric_crosscheck(build_cover_map(a, b), samples);
}

} // namespace hurwitz
