#pragma once

/**
 * Dense simple graphs with bitset adjacency rows, the unitary Cayley graph
 * builder, and the product constructions used to decompose it.
 */

#include "bitset.hpp"
#include "error.hpp"
#include "ring.hpp"
#include "text.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ucg {

class Graph
{
public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

  auto order() const -> std::size_t { return adj_.size(); }

  auto add_edge(std::size_t a, std::size_t b) -> void
  {
    if (a == b)
      throw InvalidArgument("self-loops are not allowed");
    adj_[a].set(b);
    adj_[b].set(a);
  }

  auto adjacent(std::size_t a, std::size_t b) const -> bool { return adj_[a].test(b); }
  auto neighbors(std::size_t v) const -> const Bitset& { return adj_[v]; }
  auto degree(std::size_t v) const -> std::size_t { return adj_[v].count(); }

  auto edge_count() const -> std::size_t
  {
    std::size_t twice = 0;
    for (const auto& row : adj_)
      twice += row.count();
    return twice / 2;
  }

  /// Edges (i, j) with i < j in lexicographic order.
  auto edges() const -> std::vector<std::pair<std::size_t, std::size_t>>
  {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < order(); ++i)
      adj_[i].for_each([&](std::size_t j) {
        if (j > i)
          out.emplace_back(i, j);
      });
    return out;
  }

  auto has_labels() const -> bool { return !labels_.empty(); }
  auto labels() const -> const std::vector<RingElem>& { return labels_; }
  auto set_labels(std::vector<RingElem> labels) -> void
  {
    if (!labels.empty() && labels.size() != order())
      throw InvalidArgument("label count does not match vertex count");
    labels_ = std::move(labels);
  }

  /// Adjacency equality; labels are ignored.
  friend auto operator==(const Graph& a, const Graph& b) -> bool { return a.adj_ == b.adj_; }

private:
  std::vector<Bitset> adj_;
  std::vector<RingElem> labels_;
};

inline auto complete_graph(std::size_t n) -> Graph
{
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

inline auto empty_graph(std::size_t n) -> Graph { return Graph(n); }

inline auto cycle_graph(std::size_t n) -> Graph
{
  if (n < 3)
    throw InvalidArgument("cycles need at least 3 vertices");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    g.add_edge(i, (i + 1) % n);
  return g;
}

inline auto complete_bipartite(std::size_t a, std::size_t b) -> Graph
{
  Graph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      g.add_edge(i, a + j);
  return g;
}

/**
 * G_R: vertices are the elements of R in enumeration order, with a ~ b iff
 * a - b is a unit. Unit status is computed once per element; differences are
 * taken digit by digit on the element numbering.
 */
inline auto build_unitary_cayley(const RingSpec& spec, std::uint64_t max_size = default_max_ring_size) -> Graph
{
  const ElementCoder coder(spec, max_size);
  const auto n = static_cast<std::size_t>(coder.size());
  const auto coords = coder.coordinate_count();

  std::vector<RingElem> elems;
  elems.reserve(n);
  std::vector<char> unit(n);
  std::vector<std::uint32_t> digits(n * coords);
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(coder.decode(i));
    unit[i] = is_unit(elems.back()) ? 1 : 0;
    const auto d = coder.digits(i);
    std::copy(d.begin(), d.end(), digits.begin() + static_cast<std::ptrdiff_t>(i * coords));
  }

  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto* di = &digits[i * coords];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto* dj = &digits[j * coords];
      std::uint64_t diff = 0;
      for (std::size_t c = 0; c < coords; ++c)
        diff = diff * coder.radix(c) + coder.sub_digit(c, di[c], dj[c]);
      if (unit[diff])
        g.add_edge(i, j);
    }
  }
  g.set_labels(std::move(elems));
  return g;
}

inline auto complement(const Graph& g) -> Graph
{
  const auto n = g.order();
  Graph h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j))
        h.add_edge(i, j);
  if (g.has_labels())
    h.set_labels(g.labels());
  return h;
}

/// Subgraph induced on `verts`, renumbered in the given order.
inline auto induced_subgraph(const Graph& g, std::span<const std::size_t> verts) -> Graph
{
  Bitset seen(g.order());
  for (auto v : verts) {
    if (v >= g.order())
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    if (seen.test(v))
      throw InvalidArgument("vertex " + std::to_string(v) + " listed twice");
    seen.set(v);
  }
  Graph h(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j]))
        h.add_edge(i, j);
  if (g.has_labels()) {
    std::vector<RingElem> labels;
    for (auto v : verts)
      labels.push_back(g.labels()[v]);
    h.set_labels(std::move(labels));
  }
  return h;
}

/**
 * Direct (tensor) product: tuples adjacent iff adjacent in every coordinate.
 * Tuples are numbered with the first factor most significant, matching the
 * element numbering of a product ring.
 */
inline auto tensor_product(std::span<const Graph> gs) -> Graph
{
  if (gs.empty())
    throw InvalidArgument("tensor product of an empty list");
  Graph acc = gs[0];
  for (std::size_t f = 1; f < gs.size(); ++f) {
    const auto& h = gs[f];
    const auto m = h.order();
    Graph next(acc.order() * m);
    for (std::size_t a = 0; a < acc.order(); ++a)
      acc.neighbors(a).for_each([&](std::size_t b) {
        if (b <= a)
          return;
        for (std::size_t x = 0; x < m; ++x)
          h.neighbors(x).for_each([&](std::size_t y) { next.add_edge(a * m + x, b * m + y); });
      });
    acc = std::move(next);
  }
  return acc;
}

/// Lexicographic product with the empty graph E_n: (u,i) ~ (v,j) iff u ~ v.
inline auto wreath_with_empty(const Graph& g, std::size_t n) -> Graph
{
  if (n == 0)
    throw InvalidArgument("E_n needs n >= 1");
  Graph h(g.order() * n);
  for (const auto& [u, v] : g.edges())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        h.add_edge(u * n + i, v * n + j);
  return h;
}

enum class GraphFormat
{
  edgelist,
  dot
};

inline auto parse_graph_format(std::string_view name) -> GraphFormat
{
  if (name == "edgelist")
    return GraphFormat::edgelist;
  if (name == "dot")
    return GraphFormat::dot;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

/// Edgelist: header "n m" then "i j" per edge, i < j, sorted. DOT uses ring labels when present.
inline auto export_graph(const Graph& g, GraphFormat format) -> std::string
{
  std::ostringstream os;
  const auto edges = g.edges();
  if (format == GraphFormat::edgelist) {
    os << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [i, j] : edges)
      os << i << ' ' << j << '\n';
    return os.str();
  }
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (g.has_labels())
      os << " [label=\"" << render(g.labels()[v]) << "\"]";
    os << ";\n";
  }
  for (const auto& [i, j] : edges)
    os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

inline auto parse_edgelist(std::string_view text) -> Graph
{
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw ParseError("edgelist must start with \"n m\"", 0);
  Graph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    long long i = -1, j = -1;
    if (!(in >> i >> j))
      throw ParseError("edgelist ends after " + std::to_string(e) + " of " + std::to_string(m) + " edges",
                       static_cast<std::size_t>(in.tellg() < 0 ? text.size() : static_cast<std::size_t>(in.tellg())));
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw ParseError("bad edge " + std::to_string(i) + " " + std::to_string(j),
                       static_cast<std::size_t>(in.tellg() < 0 ? text.size() : static_cast<std::size_t>(in.tellg())));
    g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  std::string rest;
  if (in >> rest)
    throw ParseError("trailing data after the declared edges", text.size());
  return g;
}

} // namespace ucg
