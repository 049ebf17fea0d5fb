#include "hurwitz/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace hurwitz
{

Perm::Perm(std::size_t degree) : _images(degree)
{
  std::iota(_images.begin(), _images.end(), point_type{0});
}

Perm::Perm(std::vector<point_type> images) : _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (auto x : _images) {
    if (x >= _images.size() || seen[x])
      throw std::invalid_argument("Perm: images do not form a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<point_type>> const &cycles)
{
  std::vector<point_type> images(degree);
  std::iota(images.begin(), images.end(), point_type{0});
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto x = cycle[i];
      if (x >= degree || used[x])
        throw std::invalid_argument("Perm: cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const
{
  for (std::size_t x = 0; x < _images.size(); ++x)
    if (_images[x] != x)
      return false;
  return true;
}

std::size_t Perm::fixed_points() const
{
  std::size_t n = 0;
  for (std::size_t x = 0; x < _images.size(); ++x)
    n += _images[x] == x;
  return n;
}

std::ostream &operator<<(std::ostream &os, Perm const &perm)
{
  std::vector<bool> seen(perm.degree(), false);
  bool any = false;
  for (Perm::point_type x = 0; x < perm.degree(); ++x) {
    if (seen[x] || perm(x) == x)
      continue;
    any = true;
    os << '(';
    for (auto y = x; !seen[y]; y = perm(y)) {
      seen[y] = true;
      if (y != x)
        os << ' ';
      os << y;
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os;
}

std::size_t PermHash::operator()(Perm const &perm) const
{
  // FNV-1a over the image words
  std::size_t h = 1469598103934665603ull;
  for (auto x : perm.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t CycleType::total() const
{
  return std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
}

CycleType CycleType::one_then_fours(std::size_t k)
{
  CycleType t;
  t.lengths.push_back(1);
  t.lengths.insert(t.lengths.end(), k, 4);
  return t;
}

CycleType CycleType::one_then_twos(std::size_t k)
{
  CycleType t;
  t.lengths.push_back(1);
  t.lengths.insert(t.lengths.end(), 2 * k, 2);
  return t;
}

std::ostream &operator<<(std::ostream &os, CycleType const &type)
{
  os << '(';
  for (std::size_t i = 0; i < type.lengths.size(); ++i)
    os << (i ? "," : "") << type.lengths[i];
  return os << ')';
}

Perm compose(Perm const &f, Perm const &g)
{
  if (f.degree() != g.degree())
    throw DegreeMismatch("compose: permutations of different degree");

  std::vector<Perm::point_type> images(f.degree());
  for (Perm::point_type x = 0; x < images.size(); ++x)
    images[x] = f(g(x));
  return Perm(std::move(images));
}

Perm inverse(Perm const &f)
{
  std::vector<Perm::point_type> images(f.degree());
  for (Perm::point_type x = 0; x < images.size(); ++x)
    images[f(x)] = x;
  return Perm(std::move(images));
}

CycleType cycle_type(Perm const &f)
{
  CycleType t;
  std::vector<bool> seen(f.degree(), false);
  for (Perm::point_type x = 0; x < f.degree(); ++x) {
    if (seen[x])
      continue;
    std::size_t len = 0;
    for (auto y = x; !seen[y]; y = f(y)) {
      seen[y] = true;
      ++len;
    }
    t.lengths.push_back(len);
  }
  std::sort(t.lengths.begin(), t.lengths.end());
  return t;
}

std::size_t perm_order(Perm const &f)
{
  std::size_t order = 1;
  for (auto len : cycle_type(f).lengths)
    order = std::lcm(order, len);
  return order;
}

Perm commutator(Perm const &f, Perm const &g)
{
  return compose(f, compose(g, compose(inverse(f), inverse(g))));
}

bool is_transitive(std::span<Perm const> gens, std::size_t degree)
{
  if (degree <= 1)
    return true;
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("is_transitive: generator of wrong degree");

  std::vector<bool> reached(degree, false);
  std::queue<Perm::point_type> frontier;
  reached[0] = true;
  frontier.push(0);
  std::size_t count = 1;
  while (!frontier.empty()) {
    auto x = frontier.front();
    frontier.pop();
    for (auto const &g : gens) {
      auto y = g(x);
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        frontier.push(y);
      }
    }
  }
  return count == degree;
}

std::optional<std::size_t>
generated_group_order(std::span<Perm const> gens, std::size_t cap)
{
  if (gens.empty())
    return 1;
  auto const degree = gens.front().degree();
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generated_group_order: mixed degrees");

  // Right-multiplying by generators from the identity reaches every element
  // of a finite group.
  std::unordered_set<Perm, PermHash> elements;
  std::vector<Perm> frontier{Perm(degree)};
  elements.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const &h : frontier) {
      for (auto const &g : gens) {
        auto hg = compose(h, g);
        if (elements.insert(hg).second) {
          if (elements.size() > cap)
            return std::nullopt;
          next.push_back(std::move(hg));
        }
      }
    }
    frontier = std::move(next);
  }
  return elements.size();
}

} // namespace hurwitz
