#pragma once

/**
 * Odd holes, bipartiteness and closed walks: the structural side of the
 * strong perfect graph theorem, used as a brute-force perfectness oracle.
 *
 * Induced cycles are found by extending induced paths from an anchor vertex
 * (the smallest vertex of the cycle). The set of vertices that may still be
 * appended is kept as a bitset; appending a vertex removes the closed
 * neighbourhood of the previous tip. Search states that failed are memoised
 * by (tip, available set, length class), which is what keeps exhaustive
 * searches on graphs with exponentially many even holes tractable.
 */

#include "bitset.hpp"
#include "error.hpp"
#include "graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace ucg {

inline constexpr std::size_t default_oracle_cap = 300;

using Clock = std::chrono::steady_clock;

struct SearchOptions
{
  /// Searches past this instant throw BudgetExceeded.
  std::optional<Clock::time_point> deadline;
  /// Memo entries kept per anchor before the table is flushed.
  std::size_t memo_limit = std::size_t{1} << 22;
};

/// Independent check: distinct vertices, consecutive adjacency (cyclically), no chords.
inline auto is_induced_cycle(const Graph& g, std::span<const std::size_t> cycle) -> bool
{
  const auto k = cycle.size();
  if (k < 3)
    return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (cycle[i] >= g.order())
      return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j])
        return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive)
        return false;
    }
  }
  return true;
}

inline auto is_odd_hole(const Graph& g, std::span<const std::size_t> cycle) -> bool
{
  return cycle.size() >= 5 && cycle.size() % 2 == 1 && is_induced_cycle(g, cycle);
}

namespace detail {

/// Open-addressing set of fixed-width word keys.
class StateSet
{
public:
  explicit StateSet(std::size_t key_words) : width_(key_words) {}

  auto size() const -> std::size_t { return count_; }

  auto clear() -> void
  {
    slots_.clear();
    used_.clear();
    count_ = 0;
  }

  auto contains(std::span<const std::uint64_t> key) const -> bool
  {
    if (used_.empty())
      return false;
    const auto mask = used_.size() - 1;
    for (auto i = hash(key) & mask;; i = (i + 1) & mask) {
      if (!used_[i])
        return false;
      if (equal(i, key))
        return true;
    }
  }

  auto insert(std::span<const std::uint64_t> key) -> void
  {
    if ((count_ + 1) * 2 > used_.size())
      grow();
    place(key);
  }

private:
  static auto mix(std::uint64_t x) -> std::uint64_t
  {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  auto hash(std::span<const std::uint64_t> key) const -> std::size_t
  {
    std::uint64_t h = 0;
    for (auto w : key)
      h = mix(h ^ w);
    return static_cast<std::size_t>(h);
  }

  auto equal(std::size_t slot, std::span<const std::uint64_t> key) const -> bool
  {
    const auto* s = &slots_[slot * width_];
    for (std::size_t i = 0; i < width_; ++i)
      if (s[i] != key[i])
        return false;
    return true;
  }

  auto place(std::span<const std::uint64_t> key) -> void
  {
    const auto mask = used_.size() - 1;
    for (auto i = hash(key) & mask;; i = (i + 1) & mask) {
      if (!used_[i]) {
        used_[i] = 1;
        std::copy(key.begin(), key.end(), slots_.begin() + static_cast<std::ptrdiff_t>(i * width_));
        ++count_;
        return;
      }
      if (equal(i, key))
        return;
    }
  }

  auto grow() -> void
  {
    auto old_slots = std::move(slots_);
    auto old_used = std::move(used_);
    const auto cap = old_used.empty() ? std::size_t{1024} : old_used.size() * 2;
    slots_.assign(cap * width_, 0);
    used_.assign(cap, 0);
    count_ = 0;
    for (std::size_t i = 0; i < old_used.size(); ++i)
      if (old_used[i])
        place(std::span<const std::uint64_t>(&old_slots[i * width_], width_));
  }

  std::size_t width_;
  std::vector<std::uint64_t> slots_;
  std::vector<char> used_;
  std::size_t count_ = 0;
};

/// Which cycle lengths count as a hit.
struct LengthTarget
{
  std::size_t lo;
  std::size_t hi;
  bool odd_only;

  auto accepts(std::size_t len) const -> bool { return len >= lo && len <= hi && (!odd_only || len % 2 == 1); }
};

class InducedCycleSearch
{
public:
  InducedCycleSearch(const Graph& g, LengthTarget target, const SearchOptions& options)
    : g_(g), target_(target), options_(options), memo_((g.order() + 63) / 64 + 1)
  {
    const auto n = g_.order();
    unbounded_ = target_.hi >= n;
    if (target_.hi > n)
      target_.hi = n;
    closed_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto c = g_.neighbors(v);
      c.set(v);
      closed_.push_back(std::move(c));
    }
  }

  /// First hit over anchors in increasing order, or nullopt after exhausting the space.
  auto run() -> std::optional<std::vector<std::size_t>>
  {
    const auto n = g_.order();
    if (target_.lo > target_.hi || n < 3)
      return std::nullopt;
    avail_.assign(target_.hi + 1, Bitset(n));
    for (std::size_t a = 0; a + 2 < n; ++a) {
      memo_.clear();
      anchor_nbrs_ = &g_.neighbors(a);
      Bitset above(n);
      for (std::size_t v = a + 1; v < n; ++v)
        above.set(v);
      Bitset interior = above;
      interior.subtract(closed_[a]);
      Bitset first = g_.neighbors(a) & above;
      for (auto p1 = first.find_first(); p1 < n; p1 = first.find_next(p1 + 1)) {
        // Orientation: the closing vertex must exceed p1.
        Bitset finals(n);
        for (auto w = first.find_next(p1 + 1); w < n; w = first.find_next(w + 1))
          finals.set(w);
        if (finals.none())
          break;
        avail_[1] = interior | finals;
        path_.assign({a, p1});
        if (extend(1))
          return path_;
      }
    }
    return std::nullopt;
  }

private:
  auto length_class(std::size_t t) const -> std::uint64_t
  {
    // Cycle length once closed from depth t is t + 2 or more.
    if (unbounded_ && t + 2 >= target_.lo)
      return 0x80000000ULL | (t % 2);
    return t;
  }

  auto make_key(std::size_t tip, const Bitset& avail, std::size_t t) -> std::span<const std::uint64_t>
  {
    key_.assign(avail.words().begin(), avail.words().end());
    key_.push_back((std::uint64_t{tip} << 32) | length_class(t));
    return key_;
  }

  auto tick() -> void
  {
    if (options_.deadline && (++nodes_ & 0xfff) == 0 && Clock::now() > *options_.deadline)
      throw BudgetExceeded("induced-cycle search exceeded its time budget");
  }

  auto extend(std::size_t t) -> bool
  {
    tick();
    const auto tip = path_[t];
    const auto& avail = avail_[t];
    auto cands = g_.neighbors(tip) & avail;
    if (cands.none())
      return false;

    if (target_.accepts(t + 2)) {
      const auto close = cands & *anchor_nbrs_;
      if (const auto w = close.find_first(); w < g_.order()) {
        path_.push_back(w);
        return true;
      }
    }
    if (t + 3 > target_.hi)
      return false;

    auto& next = avail_[t + 1];
    next = avail;
    next.subtract(closed_[tip]);
    if (!next.intersects(*anchor_nbrs_))
      return false;
    cands.subtract(*anchor_nbrs_);
    for (auto w = cands.find_first(); w < g_.order(); w = cands.find_next(w + 1)) {
      if (memo_.contains(make_key(w, next, t + 1)))
        continue;
      path_.push_back(w);
      if (extend(t + 1))
        return true;
      path_.pop_back();
      // extend() may have reused deeper buffers but never avail_[t + 1].
      if (memo_.size() >= options_.memo_limit)
        memo_.clear();
      memo_.insert(make_key(w, next, t + 1));
    }
    return false;
  }

  const Graph& g_;
  LengthTarget target_;
  SearchOptions options_;
  bool unbounded_ = false;
  std::vector<Bitset> closed_;
  std::vector<Bitset> avail_;
  std::vector<std::size_t> path_;
  const Bitset* anchor_nbrs_ = nullptr;
  StateSet memo_;
  std::vector<std::uint64_t> key_;
  std::uint64_t nodes_ = 0;
};

} // namespace detail

/**
 * First induced cycle of exactly k vertices (k >= 4), scanning anchors and
 * then extensions in increasing vertex order.
 */
inline auto find_induced_cycle(const Graph& g, std::size_t k, const SearchOptions& options = {})
  -> std::optional<std::vector<std::size_t>>
{
  if (k < 4)
    throw InvalidArgument("induced cycle search needs k >= 4");
  if (g.order() == 0 || k > g.order())
    return std::nullopt;
  return detail::InducedCycleSearch(g, {k, k, false}, options).run();
}

struct BipartiteResult
{
  bool bipartite = false;
  std::vector<int> colouring;          // 0/1 per vertex when bipartite
  std::vector<std::size_t> odd_walk;   // closed walk of odd length otherwise
};

/// BFS 2-colouring; a monochromatic edge yields an odd closed walk through the BFS tree.
inline auto is_bipartite(const Graph& g) -> BipartiteResult
{
  const auto n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != -1)
      continue;
    colour[root] = 0;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (auto v = g.neighbors(u).find_first(); v < n; v = g.neighbors(u).find_next(v + 1)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          // u -> ... -> root -> ... -> v, closed by the edge v ~ u.
          std::vector<std::size_t> up, down;
          for (auto x = u; x != n; x = parent[x])
            up.push_back(x);
          for (auto x = v; x != n; x = parent[x])
            down.push_back(x);
          while (up.size() > 1 && down.size() > 1 && up[up.size() - 2] == down[down.size() - 2]) {
            up.pop_back();
            down.pop_back();
          }
          std::vector<std::size_t> walk = up;
          for (std::size_t i = down.size() - 1; i-- > 0;)
            walk.push_back(down[i]);
          return {false, {}, std::move(walk)};
        }
      }
    }
  }
  return {true, std::move(colour), {}};
}

struct HoleFound
{
  std::vector<std::size_t> vertices;
  bool in_complement = false;
};

struct HoleNone
{
  std::size_t max_length = 0;
  bool exhaustive = false;
};

struct HoleReport
{
  std::variant<HoleFound, HoleNone> outcome;

  auto found() const -> bool { return std::holds_alternative<HoleFound>(outcome); }
  auto hole() const -> const HoleFound& { return std::get<HoleFound>(outcome); }
  auto none() const -> const HoleNone& { return std::get<HoleNone>(outcome); }
};

/**
 * Odd holes of length 5..max_length. Length 5 is searched on its own first
 * so the common certificate is a shortest one; longer odd lengths are then
 * covered by a single search that accepts any odd length >= 7. Bipartite
 * graphs are answered without searching. The report is exhaustive when
 * max_length >= n.
 */
inline auto find_odd_hole(const Graph& g, std::size_t max_length, const SearchOptions& options = {}) -> HoleReport
{
  if (max_length < 5 || max_length % 2 == 0)
    throw InvalidArgument("max_length must be odd and at least 5");
  const auto n = g.order();
  if (n >= 5 && !is_bipartite(g).bipartite) {
    if (auto c = detail::InducedCycleSearch(g, {5, 5, false}, options).run())
      return {HoleFound{std::move(*c), false}};
    if (max_length >= 7 && n >= 7)
      if (auto c = detail::InducedCycleSearch(g, {7, max_length, true}, options).run())
        return {HoleFound{std::move(*c), false}};
  }
  return {HoleNone{max_length, max_length >= n}};
}

/// Largest odd bound that makes find_odd_hole exhaustive on g.
inline auto exhaustive_bound(const Graph& g) -> std::size_t
{
  const auto n = g.order();
  return n < 5 ? 5 : (n % 2 == 1 ? n : n + 1);
}

/**
 * Closed walk v_1..v_k with v_1 = start, consecutive vertices adjacent and
 * v_k ~ v_1. Even k bounces on an edge; odd k uses a shortest odd closed walk
 * through start (parity BFS), padded by bouncing on its first edge.
 */
inline auto closed_walk_of_length(const Graph& g, std::size_t k, std::size_t start)
  -> std::optional<std::vector<std::size_t>>
{
  if (k < 3)
    throw InvalidArgument("closed walks need k >= 3");
  const auto n = g.order();
  if (start >= n)
    throw InvalidArgument("start vertex out of range");
  const auto first = g.neighbors(start).find_first();
  if (first >= n)
    return std::nullopt;
  if (k % 2 == 0) {
    std::vector<std::size_t> walk;
    for (std::size_t i = 0; i < k; ++i)
      walk.push_back(i % 2 == 0 ? start : first);
    return walk;
  }

  // BFS over (vertex, parity of walk length so far).
  const auto none = 2 * n;
  std::vector<std::size_t> parent(2 * n, none);
  std::vector<char> seen(2 * n, 0);
  std::vector<std::size_t> queue{2 * start};
  seen[2 * start] = 1;
  for (std::size_t head = 0; head < queue.size() && !seen[2 * start + 1]; ++head) {
    const auto state = queue[head];
    const auto u = state / 2;
    const auto parity = state % 2;
    g.neighbors(u).for_each([&](std::size_t v) {
      const auto next = 2 * v + (1 - parity);
      if (!seen[next]) {
        seen[next] = 1;
        parent[next] = state;
        queue.push_back(next);
      }
    });
  }
  if (!seen[2 * start + 1])
    return std::nullopt;
  std::vector<std::size_t> cyc;
  for (auto s = parent[2 * start + 1]; s != none; s = parent[s])
    cyc.push_back(s / 2);
  // cyc runs from the last vertex back to start; reverse so it begins at start.
  std::reverse(cyc.begin(), cyc.end());
  if (cyc.size() > k)
    return std::nullopt;
  std::vector<std::size_t> walk;
  const auto pad = (k - cyc.size()) / 2;
  for (std::size_t i = 0; i < pad; ++i) {
    walk.push_back(start);
    walk.push_back(cyc.size() > 1 ? cyc[1] : first);
  }
  walk.insert(walk.end(), cyc.begin(), cyc.end());
  return walk;
}

/// Consecutive adjacency including the closing pair; repeats allowed.
inline auto is_closed_walk(const Graph& g, std::span<const std::size_t> walk) -> bool
{
  if (walk.size() < 2)
    return false;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto a = walk[i];
    const auto b = walk[(i + 1) % walk.size()];
    if (a >= g.order() || b >= g.order() || !g.adjacent(a, b))
      return false;
  }
  return true;
}

enum class OracleAnswer
{
  perfect,
  not_perfect,
  unknown
};

struct OracleResult
{
  OracleAnswer answer = OracleAnswer::unknown;
  /// The hole when not_perfect; for perfect, the exhaustive report on the complement.
  HoleReport certificate{HoleNone{}};
};

struct OracleOptions
{
  std::size_t cap = default_oracle_cap;
  /// Required to run above the cap; turns expiry into OracleAnswer::unknown.
  std::optional<Clock::duration> time_budget;
};

/**
 * Perfect iff neither g nor its complement has an odd hole (exhaustive search).
 * A bipartite side has no odd cycles and is skipped.
 */
inline auto is_perfect_oracle(const Graph& g, const OracleOptions& options = {}) -> OracleResult
{
  if (g.order() > options.cap && !options.time_budget)
    throw SizeCapExceeded("oracle is limited to " + std::to_string(options.cap) +
                          " vertices without a time budget");
  SearchOptions search;
  if (options.time_budget)
    search.deadline = Clock::now() + *options.time_budget;
  const auto bound = exhaustive_bound(g);
  try {
    if (!is_bipartite(g).bipartite) {
      auto r = find_odd_hole(g, bound, search);
      if (r.found())
        return {OracleAnswer::not_perfect, std::move(r)};
    }
    const auto co = complement(g);
    if (!is_bipartite(co).bipartite) {
      auto r = find_odd_hole(co, bound, search);
      if (r.found()) {
        std::get<HoleFound>(r.outcome).in_complement = true;
        return {OracleAnswer::not_perfect, std::move(r)};
      }
    }
    return {OracleAnswer::perfect, {HoleNone{bound, true}}};
  } catch (const BudgetExceeded&) {
    return {OracleAnswer::unknown, {HoleNone{bound, false}}};
  }
}

} // namespace ucg
