#pragma once

/**
 * Arithmetic in small finite fields GF(p^k).
 *
 * Elements are stored by index: the coefficient vector (c_0, ..., c_{k-1}) of
 * the polynomial representative maps to sum c_i p^i. Index 0 is zero, index 1
 * is one, and enumeration walks indices in increasing order. All arithmetic is
 * table driven; tables are built once per FieldSpec and shared read-only.
 */

#include "error.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ucg {

/// Largest field order accepted unless the caller raises it.
inline constexpr std::uint32_t default_max_field_order = 256;

namespace detail {

using Poly = std::vector<std::uint32_t>;

inline auto is_prime(std::uint64_t n) -> bool
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Returns (p, k) with q = p^k, or (0, 0) if q is not a prime power.
inline auto prime_power_decompose(std::uint64_t q) -> std::pair<std::uint32_t, std::uint32_t>
{
  if (q < 2)
    return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0)
    ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1)
    return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

inline auto poly_trim(Poly& a) -> void
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

/// Remainder of a modulo a monic b, coefficients mod p.
inline auto poly_rem(Poly a, const Poly& b, std::uint32_t p) -> Poly
{
  poly_trim(a);
  const auto db = b.size() - 1;
  while (a.size() > db) {
    const auto lead = a.back();
    const auto shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
    poly_trim(a);
  }
  return a;
}

inline auto poly_mul(const Poly& a, const Poly& b, std::uint32_t p) -> Poly
{
  if (a.empty() || b.empty())
    return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  poly_trim(out);
  return out;
}

/// Monic polynomial of the given degree whose lower coefficients encode `index` in base p.
inline auto monic_from_index(std::uint32_t p, std::uint32_t degree, std::uint64_t index) -> Poly
{
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

inline auto ipow(std::uint64_t base, std::uint32_t exp) -> std::uint64_t
{
  std::uint64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline auto is_irreducible(const Poly& f, std::uint32_t p) -> bool
{
  const auto degree = static_cast<std::uint32_t>(f.size() - 1);
  if (degree == 0)
    return false;
  for (std::uint32_t dd = 1; 2 * dd <= degree; ++dd) {
    const auto count = ipow(p, dd);
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (poly_rem(f, monic_from_index(p, dd, idx), p).empty())
        return false;
  }
  return true;
}

inline auto smallest_irreducible(std::uint32_t p, std::uint32_t k) -> Poly
{
  const auto count = ipow(p, k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto f = monic_from_index(p, k, idx);
    if (is_irreducible(f, p))
      return f;
  }
  throw InternalError("no irreducible polynomial of degree " + std::to_string(k));
}

struct FieldTables
{
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint8_t> add, sub, mul;
  std::vector<std::uint8_t> neg, inv;

  auto coeffs_of(std::uint32_t v) const -> Poly
  {
    Poly c(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  }

  auto index_of(const Poly& c) const -> std::uint32_t
  {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;)
      v = v * p + c[i];
    return v;
  }
};

inline auto build_tables(std::uint32_t p, std::uint32_t k, Poly modulus)
  -> std::shared_ptr<const FieldTables>
{
  auto t = std::make_shared<FieldTables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<std::uint32_t>(ipow(p, k));
  t->modulus = std::move(modulus);
  const auto q = t->q;
  t->add.resize(std::size_t{q} * q);
  t->sub.resize(std::size_t{q} * q);
  t->mul.resize(std::size_t{q} * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  std::vector<Poly> coeffs(q);
  for (std::uint32_t v = 0; v < q; ++v)
    coeffs[v] = t->coeffs_of(v);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly s(k), d(k);
      for (std::uint32_t i = 0; i < k; ++i) {
        s[i] = (coeffs[a][i] + coeffs[b][i]) % p;
        d[i] = (coeffs[a][i] + p - coeffs[b][i]) % p;
      }
      auto m = poly_rem(poly_mul(coeffs[a], coeffs[b], p), t->modulus, p);
      m.resize(k, 0);
      t->add[a * q + b] = static_cast<std::uint8_t>(t->index_of(s));
      t->sub[a * q + b] = static_cast<std::uint8_t>(t->index_of(d));
      t->mul[a * q + b] = static_cast<std::uint8_t>(t->index_of(m));
    }
    t->neg[a] = t->sub[0 * q + a];
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) {
        t->inv[a] = static_cast<std::uint8_t>(b);
        break;
      }
  return t;
}

} // namespace detail

/**
 * Description of GF(p^k): characteristic, degree and the monic irreducible
 * modulus. Cheap to copy; the arithmetic tables are shared.
 */
class FieldSpec
{
public:
  /// GF(q) with the smallest monic irreducible modulus in index order.
  static auto of_order(std::uint64_t q, std::uint32_t max_order = default_max_field_order) -> FieldSpec
  {
    const auto [p, k] = detail::prime_power_decompose(q);
    if (p == 0)
      throw InvalidArgument("GF(" + std::to_string(q) + "): order is not a prime power");
    if (q > max_order)
      throw SizeCapExceeded("GF(" + std::to_string(q) + "): order exceeds the cap of " +
                            std::to_string(max_order));
    return FieldSpec(detail::build_tables(p, k, detail::smallest_irreducible(p, k)));
  }

  /// GF(p)[x]/(modulus); the modulus must be monic and irreducible.
  static auto with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                           std::uint32_t max_order = default_max_field_order) -> FieldSpec
  {
    if (!detail::is_prime(p))
      throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    for (auto& c : modulus)
      c %= p;
    detail::poly_trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1)
      throw InvalidArgument("modulus must be monic of degree >= 1");
    const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
    if (detail::ipow(p, k) > max_order)
      throw SizeCapExceeded("field order exceeds the cap of " + std::to_string(max_order));
    if (!detail::is_irreducible(modulus, p))
      throw InvalidArgument("modulus is reducible");
    return FieldSpec(detail::build_tables(p, k, std::move(modulus)));
  }

  auto characteristic() const -> std::uint32_t { return t_->p; }
  auto degree() const -> std::uint32_t { return t_->k; }
  auto order() const -> std::uint32_t { return t_->q; }
  auto modulus() const -> const std::vector<std::uint32_t>& { return t_->modulus; }

  // Index-level arithmetic used by the hot loops of the ring and graph layers.
  auto add(std::uint32_t a, std::uint32_t b) const -> std::uint32_t { return t_->add[a * t_->q + b]; }
  auto sub(std::uint32_t a, std::uint32_t b) const -> std::uint32_t { return t_->sub[a * t_->q + b]; }
  auto mul(std::uint32_t a, std::uint32_t b) const -> std::uint32_t { return t_->mul[a * t_->q + b]; }
  auto neg(std::uint32_t a) const -> std::uint32_t { return t_->neg[a]; }
  auto inv(std::uint32_t a) const -> std::uint32_t
  {
    if (a == 0)
      throw NotAUnit("zero has no inverse in GF(" + std::to_string(order()) + ")");
    return t_->inv[a];
  }
  auto sub_table() const -> std::span<const std::uint8_t> { return t_->sub; }

  auto coeffs_of(std::uint32_t index) const -> std::vector<std::uint32_t> { return t_->coeffs_of(index); }

  /// Index of the reduction of an arbitrary integer polynomial (lowest degree first).
  auto index_of_poly(std::span<const std::int64_t> poly) const -> std::uint32_t
  {
    const auto p = static_cast<std::int64_t>(t_->p);
    detail::Poly c;
    c.reserve(poly.size());
    for (auto v : poly)
      c.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
    auto r = detail::poly_rem(std::move(c), t_->modulus, t_->p);
    r.resize(t_->k, 0);
    return t_->index_of(r);
  }

  /// Image of an integer under Z -> GF(p) -> GF(p^k).
  auto index_of_integer(std::int64_t v) const -> std::uint32_t
  {
    const auto p = static_cast<std::int64_t>(t_->p);
    return static_cast<std::uint32_t>(((v % p) + p) % p);
  }

  friend auto operator==(const FieldSpec& a, const FieldSpec& b) -> bool
  {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
  }

private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}

  std::shared_ptr<const detail::FieldTables> t_;
};

/// An element of a FieldSpec.
class FieldElem
{
public:
  FieldElem(FieldSpec field, std::uint32_t index) : field_(std::move(field)), index_(index)
  {
    if (index_ >= field_.order())
      throw InvalidArgument("field element index out of range");
  }

  static auto zero(const FieldSpec& f) -> FieldElem { return {f, 0}; }
  static auto one(const FieldSpec& f) -> FieldElem { return {f, 1}; }

  auto field() const -> const FieldSpec& { return field_; }
  auto index() const -> std::uint32_t { return index_; }
  auto coeffs() const -> std::vector<std::uint32_t> { return field_.coeffs_of(index_); }
  auto is_zero() const -> bool { return index_ == 0; }

  auto inverse() const -> FieldElem { return {field_, field_.inv(index_)}; }

  auto pow(std::uint64_t e) const -> FieldElem
  {
    std::uint32_t r = 1, b = index_;
    while (e > 0) {
      if (e & 1)
        r = field_.mul(r, b);
      b = field_.mul(b, b);
      e >>= 1;
    }
    return {field_, r};
  }

  friend auto operator+(const FieldElem& a, const FieldElem& b) -> FieldElem
  {
    check_same(a, b);
    return {a.field_, a.field_.add(a.index_, b.index_)};
  }
  friend auto operator-(const FieldElem& a, const FieldElem& b) -> FieldElem
  {
    check_same(a, b);
    return {a.field_, a.field_.sub(a.index_, b.index_)};
  }
  friend auto operator*(const FieldElem& a, const FieldElem& b) -> FieldElem
  {
    check_same(a, b);
    return {a.field_, a.field_.mul(a.index_, b.index_)};
  }
  friend auto operator-(const FieldElem& a) -> FieldElem { return {a.field_, a.field_.neg(a.index_)}; }

  friend auto operator==(const FieldElem& a, const FieldElem& b) -> bool
  {
    return a.index_ == b.index_ && a.field_ == b.field_;
  }

private:
  static auto check_same(const FieldElem& a, const FieldElem& b) -> void
  {
    if (!(a.field_ == b.field_))
      throw ShapeMismatch("operands belong to different fields");
  }

  FieldSpec field_;
  std::uint32_t index_;
};

/// Canonical element for an arbitrary coefficient list (reduced mod p and mod the modulus).
inline auto ff_make(const FieldSpec& f, std::span<const std::int64_t> poly) -> FieldElem
{
  return {f, f.index_of_poly(poly)};
}

inline auto ff_make(const FieldSpec& f, std::initializer_list<std::int64_t> poly) -> FieldElem
{
  return ff_make(f, std::span<const std::int64_t>(poly.begin(), poly.size()));
}

/// All q elements: zero first, one second, then increasing index.
inline auto ff_enumerate(const FieldSpec& f) -> std::vector<FieldElem>
{
  std::vector<FieldElem> out;
  out.reserve(f.order());
  for (std::uint32_t v = 0; v < f.order(); ++v)
    out.emplace_back(f, v);
  return out;
}

/// First element in enumeration order outside the prime subfield's {0, 1}.
inline auto first_outside_zero_one(const FieldSpec& f) -> FieldElem
{
  if (f.order() <= 2)
    throw InvalidArgument("GF(2) has no element outside {0, 1}");
  return {f, 2};
}

} // namespace ucg
