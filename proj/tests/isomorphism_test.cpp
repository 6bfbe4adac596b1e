#include "ucg/graph.hpp"
#include "ucg/isomorphism.hpp"
#include "ucg/text.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace ucg;

namespace {

auto relabel(const Graph& g, const std::vector<std::size_t>& perm) -> Graph
{
  Graph h(g.order());
  for (const auto& [u, v] : g.edges())
    h.add_edge(perm[u], perm[v]);
  return h;
}

} // namespace

TEST(Isomorphism, Basic)
{
  EXPECT_TRUE(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  EXPECT_FALSE(is_isomorphic(complete_bipartite(3, 3), complete_graph(6)));
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), complement(cycle_graph(6))));
  EXPECT_TRUE(is_isomorphic(empty_graph(0), empty_graph(0)));
}

TEST(Isomorphism, SameDegreesDifferentGraphs)
{
  // C_6 and two triangles: both 2-regular on 6 vertices.
  Graph two_triangles(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
    two_triangles.add_edge(u, v);
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), two_triangles));
}

TEST(Isomorphism, ResidueRingReduction)
{
  const auto z9 = build_unitary_cayley(parse_ring_spec("Z(9)"));
  const auto reduced = wreath_with_empty(build_unitary_cayley(parse_ring_spec("GF(3)")), 3);
  const auto map = find_isomorphism(z9, reduced);
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(is_valid_isomorphism(z9, reduced, *map));
}

TEST(Isomorphism, RandomRelabelling)
{
  std::mt19937_64 rng(11);
  for (const auto* s : {"M(2,GF(2))", "GF(3) x GF(3) x GF(2)", "Z(12) x GF(3)", "GF(7) x GF(4)"}) {
    const auto g = build_unitary_cayley(parse_ring_spec(s));
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    const auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map.has_value()) << s;
    EXPECT_TRUE(is_valid_isomorphism(g, h, *map)) << s;
  }
}

TEST(Isomorphism, ValidatorRejectsBadMaps)
{
  const auto g = cycle_graph(5);
  EXPECT_FALSE(is_valid_isomorphism(g, g, {0, 1, 2, 3}));
  EXPECT_FALSE(is_valid_isomorphism(g, g, {0, 0, 2, 3, 4}));
  EXPECT_FALSE(is_valid_isomorphism(g, g, {0, 2, 1, 3, 4}));
  EXPECT_TRUE(is_valid_isomorphism(g, g, {1, 2, 3, 4, 0}));
}

TEST(Isomorphism, Cap)
{
  EXPECT_THROW(find_isomorphism(complete_graph(65), complete_graph(65)), SizeCapExceeded);
}
