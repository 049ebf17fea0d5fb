#ifndef HURWITZ_PERM_HPP
#define HURWITZ_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace hurwitz
{

class DegreeMismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection of {0, ..., d-1}. Products follow function composition:
/// compose(f, g) applies g first.
class Perm
{
public:
  using point_type = std::uint32_t;

  explicit Perm(std::size_t degree = 1);

  // Throws std::invalid_argument unless images is a bijection.
  explicit Perm(std::vector<point_type> images);

  // Builds a permutation from disjoint cycles; unlisted points are fixed.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<point_type>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  point_type operator()(point_type x) const { return _images[x]; }
  std::span<point_type const> images() const { return _images; }

  bool is_identity() const;
  std::size_t fixed_points() const;

  bool operator==(Perm const &) const = default;
  auto operator<=>(Perm const &) const = default;

private:
  std::vector<point_type> _images;
};

std::ostream &operator<<(std::ostream &os, Perm const &perm);

struct PermHash
{
  std::size_t operator()(Perm const &perm) const;
};

/// Sorted ascending multiset of cycle lengths.
struct CycleType
{
  std::vector<std::size_t> lengths;

  std::size_t cycles() const { return lengths.size(); }
  std::size_t total() const;

  // (1, 4, ..., 4) with k fours.
  static CycleType one_then_fours(std::size_t k);
  // (1, 2, ..., 2) with 2k twos.
  static CycleType one_then_twos(std::size_t k);

  bool operator==(CycleType const &) const = default;
};

std::ostream &operator<<(std::ostream &os, CycleType const &type);

Perm compose(Perm const &f, Perm const &g);
Perm inverse(Perm const &f);
CycleType cycle_type(Perm const &f);
// Least common multiple of the cycle lengths.
std::size_t perm_order(Perm const &f);
Perm commutator(Perm const &f, Perm const &g);

bool is_transitive(std::span<Perm const> gens, std::size_t degree);

inline constexpr std::size_t default_order_cap = 100000;

/// Exact order of <gens> by closure enumeration; nullopt once more than
/// `cap` elements have been produced.
std::optional<std::size_t>
generated_group_order(std::span<Perm const> gens,
                      std::size_t cap = default_order_cap);

} // namespace hurwitz

#endif
