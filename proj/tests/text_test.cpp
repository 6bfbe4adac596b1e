#include "ucg/text.hpp"

#include <gtest/gtest.h>

using namespace ucg;

TEST(Text, SpecRoundTrip)
{
  for (const auto* s : {"GF(2)", "M(2,GF(2)) x GF(3)", "Z(12)", "GF(4) x M(3,GF(2)) x Z(9)"})
    EXPECT_EQ(render(parse_ring_spec(s)), s);
  EXPECT_EQ(render(parse_ring_spec("  M( 2 , GF(2))x  GF( 3 )")), "M(2,GF(2)) x GF(3)");
  EXPECT_EQ(render(RingSpec{}), "0");
}

TEST(Text, SpecErrors)
{
  EXPECT_THROW(parse_ring_spec("GF(4) x"), ParseError);
  EXPECT_THROW(parse_ring_spec(""), ParseError);
  EXPECT_THROW(parse_ring_spec("GF(6)"), ParseError);
  EXPECT_THROW(parse_ring_spec("M(1,GF(2))"), ParseError);
  EXPECT_THROW(parse_ring_spec("Z(1)"), ParseError);
  EXPECT_THROW(parse_ring_spec("GF(512)"), SizeCapExceeded);
  EXPECT_THROW(parse_ring_spec("GF(3) y GF(3)"), ParseError);
  try {
    parse_ring_spec("GF(4) x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(Text, ElementRoundTrip)
{
  const auto s = parse_ring_spec("M(2,GF(4)) x GF(9) x Z(6) x GF(5)");
  for (std::uint64_t i = 0; i < 4000; i += 37) {
    const auto x = ElementCoder(s, 1u << 24).decode(i);
    EXPECT_EQ(parse_ring_elem(render(x), s), x);
  }
  const auto one = parse_ring_spec("GF(3)");
  EXPECT_EQ(render(parse_ring_elem("2", one)), "2");
  EXPECT_EQ(render(parse_ring_elem("(2)", one)), "2");
}

TEST(Text, ElementErrors)
{
  const auto s = parse_ring_spec("GF(3) x GF(3)");
  EXPECT_THROW(parse_ring_elem("(1, 2, 0)", s), ShapeMismatch);
  EXPECT_THROW(parse_ring_elem("(1, [[0,0],[0,0]])", s), Error);
  EXPECT_THROW(parse_ring_elem("(1, 2", s), ParseError);
  const auto m = parse_ring_spec("M(2,GF(2))");
  EXPECT_THROW(parse_ring_elem("[[1,0,0],[0,1,0]]", m), ShapeMismatch);
}

TEST(Text, ElementList)
{
  const auto s = parse_ring_spec("GF(3) x GF(3) x GF(3)");
  const auto list = parse_element_list("# comment\n(0, 0, 0)\n\n(1, 1, 1)  # trailing\n", s);
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(render(list[1]), "(1, 1, 1)");
}
