#include "ucg/classify.hpp"
#include "ucg/ring.hpp"
#include "ucg/text.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace ucg;

namespace {

auto spec(std::string_view text) -> RingSpec { return parse_ring_spec(text); }
auto elem(std::string_view text, const RingSpec& s) -> RingElem { return parse_ring_elem(text, s); }

// Radical oracle for Z(n): x is in the radical iff 1 + r x is a unit for every r.
auto radical_size_by_exhaustion(std::uint32_t n) -> std::uint64_t
{
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    bool in = true;
    for (std::uint32_t r = 0; r < n && in; ++r)
      in = std::gcd((1 + std::uint64_t{r} * x) % n, std::uint64_t{n}) == 1;
    count += in ? 1 : 0;
  }
  return count;
}

} // namespace

TEST(Ring, ElementArithmetic)
{
  const auto z12 = spec("Z(12)");
  EXPECT_EQ(ring_add(elem("7", z12), elem("8", z12)), elem("3", z12));

  const auto m = spec("M(2,GF(3))");
  EXPECT_EQ(ring_sub(elem("[[2,1],[1,0]]", m), ring_zero(m)), elem("[[2,1],[1,0]]", m));

  const auto mixed = spec("GF(3) x GF(4)");
  EXPECT_EQ(ring_mul(elem("(2, {0,1})", mixed), elem("(2, {0,1})", mixed)), elem("(1, {1,1})", mixed));
}

TEST(Ring, Determinants)
{
  const auto f2 = FieldSpec::of_order(2);
  for (auto q : {2u, 3u, 4u, 7u})
    for (std::size_t d = 1; d <= 5; ++d)
      EXPECT_EQ(determinant(Matrix::identity(FieldSpec::of_order(q), d)), FieldElem::one(FieldSpec::of_order(q)));
  EXPECT_EQ(determinant(symmetric_jordan(4)), FieldElem::one(f2));
  EXPECT_EQ(determinant(symmetric_jordan(5)), FieldElem::zero(f2));
  for (std::size_t n = 2; n <= 12; ++n)
    EXPECT_EQ(determinant(symmetric_jordan(n)).index(), n % 2 == 0 ? 1u : 0u) << n;
  for (std::size_t d = 3; d <= 12; ++d)
    EXPECT_EQ(determinant(corner_plus_symmetric_jordan(d)), FieldElem::one(f2)) << d;
}

TEST(Ring, DeterminantIsMultiplicative)
{
  const auto m2f2 = spec("M(2,GF(2))");
  const auto all = ring_enumerate(m2f2);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto& x = std::get<Matrix>(a.component(0));
      const auto& y = std::get<Matrix>(b.component(0));
      ASSERT_EQ(determinant(x * y), determinant(x) * determinant(y));
    }

  std::mt19937_64 rng(7);
  for (auto [d, q] : {std::pair{2u, 5u}, {3u, 3u}, {3u, 4u}, {4u, 2u}, {2u, 9u}}) {
    const auto f = FieldSpec::of_order(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    auto random_matrix = [&] {
      Matrix m(f, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          m.set(i, j, pick(rng));
      return m;
    };
    for (int t = 0; t < 1000; ++t) {
      const auto a = random_matrix(), b = random_matrix();
      ASSERT_EQ(determinant(a * b), determinant(a) * determinant(b));
    }
  }
}

TEST(Ring, IsUnit)
{
  const auto m = spec("M(2,GF(3))");
  EXPECT_TRUE(is_unit(elem("[[2,1],[1,0]]", m)));
  for (const auto* s : {"GF(5)", "M(2,GF(2))", "Z(12)", "GF(3) x Z(4)"})
    EXPECT_FALSE(is_unit(ring_zero(spec(s)))) << s;
  EXPECT_TRUE(is_unit(elem("5", spec("Z(12)"))));
  EXPECT_FALSE(is_unit(elem("(1, 2)", spec("GF(3) x Z(4)"))));
}

TEST(Ring, Enumerate)
{
  EXPECT_EQ(ring_enumerate(spec("GF(2) x GF(2)")).size(), 4u);
  EXPECT_EQ(ring_enumerate(spec("M(2,GF(2))")).size(), 16u);
  const auto z6 = ring_enumerate(spec("Z(6)"));
  ASSERT_EQ(z6.size(), 6u);
  for (std::uint32_t i = 0; i < 6; ++i)
    EXPECT_EQ(std::get<Residue>(z6[i].component(0)).value, i);
  EXPECT_EQ(ring_enumerate(RingSpec{}).size(), 1u);
  EXPECT_THROW(ring_enumerate(spec("M(3,GF(4))")), SizeCapExceeded);
}

TEST(Ring, CoderRoundTrip)
{
  for (const auto* s : {"M(2,GF(3)) x Z(4)", "GF(4) x GF(9)", "M(2,GF(2)) x GF(3) x Z(6)"}) {
    const ElementCoder coder(spec(s));
    for (std::uint64_t i = 0; i < coder.size(); ++i)
      ASSERT_EQ(coder.encode(coder.decode(i)), i) << s;
  }
}

TEST(Ring, UnitCountMatchesExhaustiveCount)
{
  EXPECT_EQ(unit_count(spec("M(2,GF(2))")), 6u);
  EXPECT_EQ(unit_count(spec("GF(5)")), 4u);
  EXPECT_EQ(unit_count(spec("Z(12)")), 4u);
  for (const auto* s : {"M(2,GF(2))", "M(2,GF(3))", "M(3,GF(2))", "M(2,GF(4))", "GF(4) x GF(9)", "Z(30) x GF(7)",
                        "M(2,GF(2)) x Z(9)", "GF(2) x GF(3) x GF(5)"}) {
    const auto r = spec(s);
    const auto all = ring_enumerate(r);
    const auto units = std::count_if(all.begin(), all.end(), [](const RingElem& x) { return is_unit(x); });
    EXPECT_EQ(unit_count(r), static_cast<std::uint64_t>(units)) << s;
  }
}

TEST(Ring, LeftInvertibleImpliesInvertible)
{
  for (const auto* s : {"M(2,GF(2))", "M(2,GF(3))", "M(3,GF(2))"}) {
    const auto r = spec(s);
    const auto all = ring_enumerate(r);
    const auto one = ring_one(r);
    for (const auto& x : all) {
      bool left = false, right = false;
      for (const auto& y : all) {
        left = left || ring_mul(y, x) == one;
        right = right || ring_mul(x, y) == one;
      }
      ASSERT_EQ(left, right) << s << " " << render(x);
      ASSERT_EQ(left, is_unit(x));
    }
  }
}

TEST(Ring, Semisimplify)
{
  auto z12 = semisimplify(spec("Z(12)"));
  EXPECT_EQ(z12.field_orders, (std::vector<std::uint32_t>{2, 3}));
  EXPECT_EQ(z12.radical_size, 2u);

  auto gf9 = semisimplify(spec("GF(9)"));
  EXPECT_EQ(gf9.field_orders, (std::vector<std::uint32_t>{9}));
  EXPECT_EQ(gf9.radical_size, 1u);

  auto mixed = semisimplify(spec("M(2,GF(2)) x Z(4)"));
  EXPECT_EQ(mixed.field_orders, (std::vector<std::uint32_t>{2}));
  ASSERT_EQ(mixed.matrix_factors.size(), 1u);
  EXPECT_EQ(mixed.matrix_factors[0], (std::pair<std::uint32_t, std::uint32_t>{2, 2}));
  EXPECT_EQ(mixed.radical_size, 2u);

  EXPECT_TRUE(semisimplify(RingSpec{}).is_zero_ring());
}

TEST(Ring, RadicalSizeMatchesOracle)
{
  for (std::uint32_t n = 2; n <= 64; ++n) {
    const auto ss = semisimplify(RingSpec({mod_int(n)}));
    EXPECT_EQ(ss.radical_size, radical_size_by_exhaustion(n)) << n;
    EXPECT_EQ(semisimple_size(ss) * ss.radical_size, n) << n;
    EXPECT_TRUE(std::is_sorted(ss.field_orders.begin(), ss.field_orders.end()));
  }
}

TEST(Ring, SumOfTwoUnits)
{
  const auto f2 = FieldSpec::of_order(2);
  const auto [u, v] = sum_of_two_units_witness(Matrix(f2, 2));
  EXPECT_NE(determinant(u), FieldElem::zero(f2));
  EXPECT_NE(determinant(v), FieldElem::zero(f2));
  EXPECT_EQ(u + v, Matrix(f2, 2));

  for (const auto* s : {"M(2,GF(3))", "M(3,GF(2))", "M(2,GF(4))"})
    for (const auto& x : ring_enumerate(spec(s))) {
      const auto& m = std::get<Matrix>(x.component(0));
      const auto [a, b] = sum_of_two_units_witness(m);
      ASSERT_EQ(a + b, m);
      ASSERT_FALSE(determinant(a).is_zero());
      ASSERT_FALSE(determinant(b).is_zero());
    }
}

TEST(Ring, ShapeErrors)
{
  const auto a = spec("GF(3)");
  const auto b = spec("GF(5)");
  EXPECT_THROW(ring_add(ring_one(a), ring_one(b)), ShapeMismatch);
  EXPECT_THROW(ring_add(ring_one(a), ring_one(spec("GF(3) x GF(3)"))), ShapeMismatch);
  const auto f3 = FieldSpec::of_order(3);
  EXPECT_THROW(Matrix::identity(f3, 2) * Matrix::identity(f3, 3), ShapeMismatch);
  EXPECT_FALSE(belongs_to(a, ring_one(b)));
  EXPECT_THROW(require_belongs(a, ring_one(b)), ShapeMismatch);
}

TEST(Ring, ZeroRing)
{
  const RingSpec zero;
  EXPECT_TRUE(zero.is_zero_ring());
  EXPECT_EQ(zero.size(), 1u);
  EXPECT_TRUE(is_unit(ring_zero(zero)));
  EXPECT_EQ(unit_count(zero), 1u);
}
