#include "hurwitz/search.hpp"

#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace hurwitz
{

std::string_view to_string(SearchStatus s)
{
  switch (s) {
  case SearchStatus::Found:
    return "Found";
  case SearchStatus::Exhausted:
    return "Exhausted";
  case SearchStatus::BudgetExceeded:
    return "BudgetExceeded";
  }
  return "Exhausted";
}

SearchStatus parse_search_status(std::string_view name)
{
  for (auto s : {SearchStatus::Found, SearchStatus::Exhausted,
                 SearchStatus::BudgetExceeded})
    if (to_string(s) == name)
      return s;
  throw std::invalid_argument("unknown search status '" + std::string(name) + "'");
}

Perm canonical_sigma0(std::size_t d)
{
  std::vector<Perm::point_type> images(d);
  images[0] = 0;
  for (std::size_t x = 1; x < d; ++x)
    images[x] = static_cast<Perm::point_type>(x % 4 == 0 ? x - 3 : x + 1);
  return Perm(std::move(images));
}

namespace
{

using point = Perm::point_type;
constexpr point unset = std::numeric_limits<point>::max();

struct Branch
{
  point tau_fixed;  // fixed point of tau
  point first;      // smallest point other than tau_fixed
  point partner;    // tau(first)
};

enum class Stop { None, Budget, Superseded };

/// Depth-first enumeration of the pairings of tau below a branch, with
/// sigma1 = sigma0^-1 tau maintained as a partial injection.
class Backtracker
{
public:
  Backtracker(std::size_t d, std::uint64_t budget, std::atomic<std::uint64_t> &shared_nodes)
    : _d(d), _inv0(d), _tau(d, unset), _s1(d, unset), _pred1(d, unset),
      _budget(budget), _shared_nodes(shared_nodes)
  {
    auto const s0 = canonical_sigma0(d);
    _sigma0 = s0;
    for (point x = 0; x < d; ++x)
      _inv0[s0(x)] = x;
  }

  // Returns true when visit() asked to stop at a solution.
  template <class Visit, class Superseded>
  bool run(Branch const &b, Visit &&visit, Superseded &&superseded)
  {
    _stop = Stop::None;
    if (!assign(b.tau_fixed, b.tau_fixed)) {
      unassign(b.tau_fixed, b.tau_fixed);
      return false;
    }
    bool done = false;
    if (b.first == unset) {
      done = leaf(visit);
    } else {
      if (count_node() && assign(b.first, b.partner))
        done = descend(visit, superseded);
      unassign(b.first, b.partner);
    }
    unassign(b.tau_fixed, b.tau_fixed);
    return done;
  }

  Stop stop() const { return _stop; }
  std::uint64_t local_nodes() const { return _local_nodes; }
  void flush()
  {
    _shared_nodes.fetch_add(_unflushed);
    _unflushed = 0;
  }

private:
  template <class Visit, class Superseded>
  bool descend(Visit &visit, Superseded &superseded)
  {
    point x = 0;
    while (x < _d && _tau[x] != unset)
      ++x;
    if (x == _d)
      return leaf(visit);

    if ((_local_nodes & 0xfffu) == 0 && superseded()) {
      _stop = Stop::Superseded;
      return false;
    }
    for (point y = x + 1; y < _d; ++y) {
      if (_tau[y] != unset)
        continue;
      if (!count_node())
        return false;
      bool const ok = assign(x, y);
      bool done = ok && descend(visit, superseded);
      unassign(x, y);
      if (done || _stop != Stop::None)
        return done;
    }
    return false;
  }

  bool count_node()
  {
    ++_local_nodes;
    if (++_unflushed == 4096)
      flush();
    if (_shared_nodes.load(std::memory_order_relaxed) + _unflushed > _budget) {
      _stop = Stop::Budget;
      return false;
    }
    return true;
  }

  template <class Visit>
  bool leaf(Visit &visit)
  {
    std::vector<point> tau(_tau), s1(_s1);
    Perm const sigma1(std::move(s1));
    if (cycle_type(sigma1) != CycleType::one_then_fours((_d - 1) / 4))
      return false;
    std::array<Perm, 2> const gens{_sigma0, sigma1};
    if (!is_transitive(gens, _d))
      return false;
    return visit(Perm(std::move(tau)));
  }

  // Sets tau(x) = y and tau(y) = x; false when sigma1 can no longer reach
  // type (1, 4, ..., 4). Always follow with unassign().
  bool assign(point x, point y)
  {
    _tau[x] = y;
    _tau[y] = x;
    bool ok = link(x, _inv0[y]);
    if (x != y)
      ok = link(y, _inv0[x]) && ok;
    return ok && component_ok(x) && (x == y || component_ok(y));
  }

  void unassign(point x, point y)
  {
    for (point p : {x, y}) {
      if (_tau[p] == unset)
        continue;
      auto const z = _s1[p];
      if (z != unset && _pred1[z] == p)
        _pred1[z] = unset;
      if (_s1[p] != unset && _s1[p] == p)
        --_s1_fixed;
      _s1[p] = unset;
      _tau[p] = unset;
    }
  }

  bool link(point x, point z)
  {
    _s1[x] = z;
    _pred1[z] = x;
    if (x == z)
      ++_s1_fixed;
    return _s1_fixed <= 1;
  }

  // The sigma1-component through x is a cycle of length 1 or 4, or an
  // open chain of at most 4 points.
  bool component_ok(point x) const
  {
    std::size_t len = 1;
    point y = _s1[x];
    while (y != unset && y != x) {
      if (++len > 4)
        return false;
      y = _s1[y];
    }
    if (y == x)
      return len == 1 || len == 4;
    for (point w = _pred1[x]; w != unset; w = _pred1[w])
      if (++len > 4)
        return false;
    return true;
  }

  std::size_t _d;
  Perm _sigma0;
  std::vector<point> _inv0;
  std::vector<point> _tau;
  std::vector<point> _s1;
  std::vector<point> _pred1;
  std::size_t _s1_fixed = 0;
  std::uint64_t _budget;
  std::atomic<std::uint64_t> &_shared_nodes;
  std::uint64_t _local_nodes = 0;
  std::uint64_t _unflushed = 0;
  Stop _stop = Stop::None;
};

std::vector<Branch> first_level_branches(std::size_t d)
{
  std::vector<Branch> out;
  if (d == 1) {
    out.push_back({0, unset, unset});
    return out;
  }
  // tau(0) = 0 sorts before every branch with tau(0) != 0.
  for (point y = 2; y < d; ++y)
    out.push_back({0, 1, y});
  for (point y = 2; y < d; ++y)
    out.push_back({1, 0, y});
  return out;
}

void check_degree(std::size_t d)
{
  if (d == 0 || d % 4 != 1)
    throw InvalidDegree("search: degree must be 1 mod 4");
}

} // namespace

SearchOutcome search_cover(std::size_t d, SearchOptions const &options)
{
  check_degree(d);
  auto const start = std::chrono::steady_clock::now();
  auto const branches = first_level_branches(d);

  std::atomic<std::uint64_t> shared_nodes{0};
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best_branch{none};
  std::atomic<std::size_t> next_branch{0};
  std::atomic<bool> budget_hit{false};
  std::vector<std::optional<Perm>> witnesses(branches.size());

  auto worker = [&] {
    Backtracker bt(d, options.budget, shared_nodes);
    for (;;) {
      auto const idx = next_branch.fetch_add(1);
      if (idx >= branches.size() || idx > best_branch.load() || budget_hit.load())
        break;
      auto visit = [&](Perm tau) {
        witnesses[idx] = std::move(tau);
        return true;
      };
      auto superseded = [&] { return best_branch.load() < idx || budget_hit.load(); };
      if (bt.run(branches[idx], visit, superseded)) {
        // monotone: best_branch only decreases
        auto cur = best_branch.load();
        while (idx < cur && !best_branch.compare_exchange_weak(cur, idx)) {
        }
      } else if (bt.stop() == Stop::Budget) {
        budget_hit = true;
      }
    }
    bt.flush();
  };

  auto const workers = std::max(1u, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  SearchOutcome out;
  out.nodes_explored = shared_nodes.load();
  auto const best = best_branch.load();
  if (best != none) {
    auto tau = *witnesses[best];
    auto sigma0 = canonical_sigma0(d);
    auto sigma1 = compose(inverse(sigma0), tau);
    out.status = SearchStatus::Found;
    out.certificate.emplace(std::move(sigma0), std::move(sigma1), std::move(tau),
                            Provenance::Search);
  } else if (budget_hit.load()) {
    out.status = SearchStatus::BudgetExceeded;
  } else {
    out.status = SearchStatus::Exhausted;
  }
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

namespace search_detail
{

void for_each_canonical_solution(std::size_t d,
                                 std::function<void(Perm const &)> const &visit)
{
  check_degree(d);
  std::atomic<std::uint64_t> nodes{0};
  Backtracker bt(d, std::numeric_limits<std::uint64_t>::max(), nodes);
  for (auto const &b : first_level_branches(d))
    bt.run(
        b,
        [&](Perm tau) {
          visit(tau);
          return false;
        },
        [] { return false; });
}

} // namespace search_detail

} // namespace hurwitz
