#include "ucg/finfield.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ucg;

namespace {

// Independent oracle: schoolbook multiplication followed by long division by
// the field modulus, on coefficient vectors (lowest degree first).
auto oracle_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                const std::vector<std::uint32_t>& modulus, std::uint32_t p) -> std::vector<std::uint32_t>
{
  std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  const auto k = modulus.size() - 1;
  for (std::size_t top = prod.size(); top-- > k;) {
    const auto c = prod[top];
    if (c == 0)
      continue;
    for (std::size_t i = 0; i <= k; ++i)
      prod[top - k + i] = (prod[top - k + i] + (p - c) * modulus[i]) % p;
  }
  std::vector<std::uint32_t> out(k, 0);
  for (std::size_t i = 0; i < k && i < prod.size(); ++i)
    out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

const std::uint32_t small_orders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81};

} // namespace

TEST(FieldSpec, ReducesIntegerCoefficients)
{
  const auto f3 = FieldSpec::of_order(3);
  EXPECT_EQ(ff_make(f3, {5, 0}), ff_make(f3, {2}));
  EXPECT_EQ(ff_make(f3, {-1}).index(), 2u);
  const auto f2 = FieldSpec::of_order(2);
  EXPECT_EQ(ff_make(f2, {1}), FieldElem::one(f2));
}

TEST(FieldSpec, GF4Generator)
{
  const auto f4 = FieldSpec::of_order(4);
  EXPECT_EQ(f4.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const auto z = ff_make(f4, {0, 1});
  EXPECT_EQ(z.coeffs(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(z * z, ff_make(f4, {1, 1}));
  EXPECT_EQ(z.inverse(), ff_make(f4, {1, 1}));
}

TEST(FieldSpec, SmallArithmetic)
{
  const auto f3 = FieldSpec::of_order(3);
  EXPECT_EQ(ff_make(f3, {2}) * ff_make(f3, {2}), FieldElem::one(f3));
  EXPECT_EQ(ff_make(f3, {2}).inverse(), ff_make(f3, {2}));
  const auto f5 = FieldSpec::of_order(5);
  EXPECT_EQ(FieldElem::one(f5).inverse(), FieldElem::one(f5));
  for (const auto& a : ff_enumerate(f5))
    EXPECT_EQ(a + FieldElem::zero(f5), a);
}

TEST(FieldSpec, Enumeration)
{
  EXPECT_EQ(ff_enumerate(FieldSpec::of_order(2)).size(), 2u);
  const auto e3 = ff_enumerate(FieldSpec::of_order(3));
  ASSERT_EQ(e3.size(), 3u);
  for (std::uint32_t i = 0; i < 3; ++i)
    EXPECT_EQ(e3[i].index(), i);
  for (auto q : small_orders) {
    const auto f = FieldSpec::of_order(q);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& a : ff_enumerate(f))
      seen.insert(a.coeffs());
    EXPECT_EQ(seen.size(), q);
    EXPECT_TRUE(ff_enumerate(f).front().is_zero());
  }
}

TEST(FieldSpec, MultiplicationMatchesPolynomialOracle)
{
  for (auto q : small_orders) {
    const auto f = FieldSpec::of_order(q);
    for (const auto& a : ff_enumerate(f))
      for (const auto& b : ff_enumerate(f))
        ASSERT_EQ((a * b).coeffs(), oracle_mul(a.coeffs(), b.coeffs(), f.modulus(), f.characteristic()))
          << "q=" << q;
  }
}

TEST(FieldSpec, FieldAxiomsExhaustive)
{
  for (auto q : small_orders) {
    const auto f = FieldSpec::of_order(q);
    const auto els = ff_enumerate(f);
    for (const auto& a : els) {
      if (!a.is_zero())
        ASSERT_EQ(a * a.inverse(), FieldElem::one(f));
      ASSERT_EQ(a + (-a), FieldElem::zero(f));
      for (const auto& b : els) {
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a - b) + b, a);
      }
    }
    // Associativity and distributivity on a stride to keep q=81 quick.
    const std::size_t step = q > 27 ? 7 : 1;
    for (std::size_t i = 0; i < els.size(); i += step)
      for (std::size_t j = 0; j < els.size(); j += step)
        for (std::size_t k = 0; k < els.size(); ++k) {
          const auto &a = els[i], &b = els[j], &c = els[k];
          ASSERT_EQ((a + b) + c, a + (b + c));
          ASSERT_EQ((a * b) * c, a * (b * c));
          ASSERT_EQ(a * (b + c), a * b + a * c);
        }
  }
}

TEST(FieldSpec, Frobenius)
{
  for (auto q : small_orders) {
    const auto f = FieldSpec::of_order(q);
    for (const auto& a : ff_enumerate(f))
      ASSERT_EQ(a.pow(q), a) << "q=" << q;
  }
}

TEST(FieldSpec, ModuliAreIrreducible)
{
  for (auto q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 128u, 243u, 256u}) {
    const auto f = FieldSpec::of_order(q);
    EXPECT_TRUE(detail::is_irreducible(f.modulus(), f.characteristic())) << q;
    EXPECT_EQ(f.modulus().back(), 1u);
  }
}

TEST(FieldSpec, Errors)
{
  EXPECT_THROW(FieldSpec::of_order(6), InvalidArgument);
  EXPECT_THROW(FieldSpec::of_order(1), InvalidArgument);
  EXPECT_THROW(FieldSpec::of_order(512), SizeCapExceeded);
  EXPECT_THROW(FieldSpec::with_modulus(2, {1, 0, 1}), InvalidArgument); // x^2+1 = (x+1)^2
  EXPECT_THROW(FieldElem::zero(FieldSpec::of_order(5)).inverse(), NotAUnit);
  EXPECT_THROW(FieldElem::one(FieldSpec::of_order(3)) + FieldElem::one(FieldSpec::of_order(5)), ShapeMismatch);
}

TEST(FieldSpec, CustomModulus)
{
  // x^2 + 1 is irreducible over GF(3).
  const auto f = FieldSpec::with_modulus(3, {1, 0, 1});
  const auto x = ff_make(f, {0, 1});
  EXPECT_EQ(x * x, ff_make(f, {-1}));
}
