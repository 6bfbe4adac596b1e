#include "ucg/graph.hpp"
#include "ucg/isomorphism.hpp"
#include "ucg/text.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace ucg;

namespace {

auto cayley(std::string_view text) -> Graph { return build_unitary_cayley(parse_ring_spec(text)); }

// Oracle for G_R: recompute adjacency straight from element differences.
auto adjacency_by_difference(const RingSpec& spec) -> Graph
{
  const auto els = ring_enumerate(spec);
  Graph g(els.size());
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (is_unit(ring_sub(els[i], els[j])))
        g.add_edge(i, j);
  return g;
}

const char* const corpus[] = {"GF(5)", "Z(8)", "M(2,GF(2))", "GF(3) x GF(3)", "GF(2) x GF(4) x Z(3)",
                              "M(2,GF(2)) x GF(3)", "Z(12)", "M(2,GF(3))", "GF(4) x GF(9)", "Z(9) x GF(2)"};

} // namespace

TEST(Graph, SmallRings)
{
  const auto k5 = cayley("GF(5)");
  EXPECT_EQ(k5.order(), 5u);
  EXPECT_EQ(k5.edges(), complete_graph(5).edges());

  const auto z8 = cayley("Z(8)");
  EXPECT_EQ(z8.edge_count(), 16u);
  EXPECT_TRUE(is_isomorphic(z8, complete_bipartite(4, 4)));

  const auto m = cayley("M(2,GF(2))");
  EXPECT_EQ(m.order(), 16u);
  EXPECT_EQ(m.edge_count(), 48u);
  for (std::size_t v = 0; v < m.order(); ++v)
    EXPECT_EQ(m.degree(v), 6u);
}

TEST(Graph, BuilderMatchesDifferenceOracle)
{
  for (const auto* s : corpus) {
    const auto spec = parse_ring_spec(s);
    const auto g = build_unitary_cayley(spec);
    EXPECT_EQ(g.edges(), adjacency_by_difference(spec).edges()) << s;
    for (std::size_t v = 0; v < g.order(); ++v)
      ASSERT_EQ(g.degree(v), unit_count(spec)) << s;
    for (std::size_t v = 0; v < g.order(); ++v)
      ASSERT_FALSE(g.adjacent(v, v));
    ASSERT_EQ(g.labels().size(), g.order());
    EXPECT_EQ(g.labels()[0], ring_zero(spec));
  }
}

TEST(Graph, ZeroRingIsOneVertex)
{
  const auto g = build_unitary_cayley(RingSpec{});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Graph, SizeCap)
{
  EXPECT_THROW(cayley("M(3,GF(4))"), SizeCapExceeded);
  EXPECT_THROW(build_unitary_cayley(parse_ring_spec("GF(7) x GF(7)"), 40), SizeCapExceeded);
}

TEST(Graph, Complement)
{
  EXPECT_EQ(complement(complete_graph(5)).edge_count(), 0u);
  EXPECT_TRUE(is_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  for (const auto* s : corpus) {
    const auto g = cayley(s);
    EXPECT_EQ(complement(complement(g)).edges(), g.edges()) << s;
    EXPECT_EQ(complement(g).edge_count() + g.edge_count(), g.order() * (g.order() - 1) / 2);
  }
}

TEST(Graph, InducedSubgraph)
{
  const std::vector<std::size_t> three{0, 2, 4};
  EXPECT_EQ(induced_subgraph(complete_graph(5), three).edges(), complete_graph(3).edges());

  const auto g = cayley("M(2,GF(3))");
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(induced_subgraph(g, all).edges(), g.edges());

  // Diagonal matrices of M_2(GF(2)) induce G_{GF(2) x GF(2)}.
  const auto m = cayley("M(2,GF(2))");
  std::vector<std::size_t> diagonal;
  for (std::size_t v = 0; v < m.order(); ++v) {
    const auto& x = std::get<Matrix>(m.labels()[v].component(0));
    if (x.raw(0, 1) == 0 && x.raw(1, 0) == 0)
      diagonal.push_back(v);
  }
  ASSERT_EQ(diagonal.size(), 4u);
  EXPECT_TRUE(is_isomorphic(induced_subgraph(m, diagonal), cayley("GF(2) x GF(2)")));
}

TEST(Graph, TensorProduct)
{
  const Graph k3[] = {complete_graph(3)};
  EXPECT_EQ(tensor_product(k3).edges(), complete_graph(3).edges());

  const Graph k2k2[] = {complete_graph(2), complete_graph(2)};
  const auto matching = tensor_product(k2k2);
  EXPECT_EQ(matching.edge_count(), 2u);
  for (std::size_t v = 0; v < 4; ++v)
    EXPECT_EQ(matching.degree(v), 1u);

  for (const auto* s : {"GF(3) x GF(3)", "GF(2) x GF(4) x Z(3)", "M(2,GF(2)) x GF(3)", "Z(9) x GF(2)"}) {
    const auto spec = parse_ring_spec(s);
    std::vector<Graph> parts;
    for (const auto& a : spec.factors())
      parts.push_back(build_unitary_cayley(RingSpec({a})));
    EXPECT_EQ(tensor_product(parts).edges(), build_unitary_cayley(spec).edges()) << s;
  }
}

TEST(Graph, WreathWithEmpty)
{
  const auto g = cayley("M(2,GF(2))");
  EXPECT_EQ(wreath_with_empty(g, 1).edges(), g.edges());
  EXPECT_TRUE(is_isomorphic(wreath_with_empty(complete_graph(2), 4), complete_bipartite(4, 4)));
  EXPECT_TRUE(is_isomorphic(wreath_with_empty(cayley("GF(2)"), 2), cayley("Z(4)")));
  EXPECT_THROW(wreath_with_empty(g, 0), InvalidArgument);
}

TEST(Graph, WreathReductionForResidueRings)
{
  for (std::uint32_t n = 2; n <= 32; ++n) {
    const auto ss = semisimplify(RingSpec({mod_int(n)}));
    const auto expected = wreath_with_empty(build_unitary_cayley(to_ring_spec(ss)), ss.radical_size);
    const auto actual = build_unitary_cayley(RingSpec({mod_int(n)}));
    const auto map = find_isomorphism(actual, expected);
    ASSERT_TRUE(map.has_value()) << n;
    EXPECT_TRUE(is_valid_isomorphism(actual, expected, *map)) << n;
  }
}

TEST(Graph, Export)
{
  EXPECT_EQ(export_graph(empty_graph(2), GraphFormat::edgelist), "2 0\n");
  EXPECT_EQ(export_graph(complete_graph(3), GraphFormat::edgelist), "3 3\n0 1\n0 2\n1 2\n");
  const auto dot = export_graph(cayley("GF(3)"), GraphFormat::dot);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 1 + 3 + 3 + 1);
  EXPECT_NE(dot.find("[label=\"2\"]"), std::string::npos);
  EXPECT_THROW(parse_graph_format("gml"), InvalidArgument);
}

TEST(Graph, EdgelistRoundTrip)
{
  for (const auto* s : corpus) {
    const auto g = cayley(s);
    EXPECT_EQ(parse_edgelist(export_graph(g, GraphFormat::edgelist)).edges(), g.edges()) << s;
  }
  EXPECT_THROW(parse_edgelist(""), ParseError);
  EXPECT_THROW(parse_edgelist("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n0 1\n1 2\n"), ParseError);
}
