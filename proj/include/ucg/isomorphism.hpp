#pragma once

// Backtracking isomorphism test for small graphs, with colour-refinement pruning.

#include "bitset.hpp"
#include "error.hpp"
#include "graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace ucg {

inline constexpr std::size_t default_isomorphism_cap = 64;

namespace detail {

/// Stable colour refinement started from degrees; colours are comparable across
/// graphs refined together: both share one signature dictionary.
inline auto refine_colours(const Graph& g, const Graph& h) -> std::pair<std::vector<int>, std::vector<int>>
{
  std::vector<int> cg(g.order()), ch(h.order());
  for (std::size_t v = 0; v < g.order(); ++v)
    cg[v] = static_cast<int>(g.degree(v));
  for (std::size_t v = 0; v < h.order(); ++v)
    ch[v] = static_cast<int>(h.degree(v));

  for (std::size_t round = 0; round < g.order() + 1; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    auto signature = [](const Graph& x, const std::vector<int>& c, std::size_t v) {
      std::vector<int> nb;
      x.neighbors(v).for_each([&](std::size_t u) { nb.push_back(c[u]); });
      std::sort(nb.begin(), nb.end());
      return std::make_pair(c[v], std::move(nb));
    };
    std::vector<std::pair<int, std::vector<int>>> sg, sh;
    for (std::size_t v = 0; v < g.order(); ++v)
      sg.push_back(signature(g, cg, v));
    for (std::size_t v = 0; v < h.order(); ++v)
      sh.push_back(signature(h, ch, v));
    for (const auto& s : sg)
      dict.emplace(s, 0);
    for (const auto& s : sh)
      dict.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : dict)
      v = next++;
    std::vector<int> ng(g.order()), nh(h.order());
    for (std::size_t v = 0; v < g.order(); ++v)
      ng[v] = dict[sg[v]];
    for (std::size_t v = 0; v < h.order(); ++v)
      nh[v] = dict[sh[v]];
    auto classes = [](const std::vector<int>& c) {
      auto s = c;
      std::sort(s.begin(), s.end());
      return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
    };
    const bool stable = classes(ng) == classes(cg) && classes(nh) == classes(ch);
    cg = std::move(ng);
    ch = std::move(nh);
    if (stable)
      break;
  }
  return {cg, ch};
}

} // namespace detail

/**
 * Returns a bijection m with g.adjacent(u, v) == h.adjacent(m[u], m[v]) for
 * all u, v, or nullopt if none exists.
 */
inline auto find_isomorphism(const Graph& g, const Graph& h, std::size_t cap = default_isomorphism_cap)
  -> std::optional<std::vector<std::size_t>>
{
  if (g.order() > cap || h.order() > cap)
    throw SizeCapExceeded("isomorphism search is limited to " + std::to_string(cap) + " vertices");
  const auto n = g.order();
  if (h.order() != n || g.edge_count() != h.edge_count())
    return std::nullopt;

  const auto [cg, ch] = detail::refine_colours(g, h);
  {
    auto a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      return std::nullopt;
  }

  // Visit g in BFS order so each new vertex is constrained by mapped neighbours.
  std::vector<std::size_t> order;
  std::vector<char> queued(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (queued[root])
      continue;
    queued[root] = 1;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      g.neighbors(order[head]).for_each([&](std::size_t u) {
        if (!queued[u]) {
          queued[u] = 1;
          order.push_back(u);
        }
      });
  }

  std::vector<std::size_t> map(n, n);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t depth, std::size_t cand) {
    const auto v = order[depth];
    for (std::size_t i = 0; i < depth; ++i) {
      const auto u = order[i];
      if (g.adjacent(v, u) != h.adjacent(cand, map[u]))
        return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n)
      return true;
    const auto v = order[depth];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || ch[c] != cg[v] || !consistent(depth, c))
        continue;
      map[v] = c;
      used[c] = 1;
      if (self(self, depth + 1))
        return true;
      used[c] = 0;
    }
    map[v] = n;
    return false;
  };

  if (!search(search, 0))
    return std::nullopt;
  return map;
}

inline auto is_isomorphic(const Graph& g, const Graph& h, std::size_t cap = default_isomorphism_cap) -> bool
{
  return find_isomorphism(g, h, cap).has_value();
}

/// Checks a claimed isomorphism independently of the search.
inline auto is_valid_isomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& map) -> bool
{
  const auto n = g.order();
  if (h.order() != n || map.size() != n)
    return false;
  std::vector<char> hit(n, 0);
  for (auto m : map) {
    if (m >= n || hit[m])
      return false;
    hit[m] = 1;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v]))
        return false;
  return true;
}

} // namespace ucg
