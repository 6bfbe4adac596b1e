#pragma once

/**
 * Finite rings presented as products of atoms: fields GF(q), matrix rings
 * M_d(GF(q)) with d >= 2, and residue rings Z/n.
 *
 * RingElem is a tuple of components aligned with the atoms of a RingSpec.
 * ElementCoder numbers the elements of a spec in mixed radix (first atom most
 * significant, matrix entries row-major, each coordinate in field/residue
 * order), so index 0 is always the zero element.
 */

#include "error.hpp"
#include "finfield.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ucg {

/// Default element cap for operations that materialize a whole ring.
inline constexpr std::uint64_t default_max_ring_size = 4096;

/// Square d x d matrix over a finite field, entries stored as field indices.
class Matrix
{
public:
  Matrix(FieldSpec field, std::size_t d) : field_(std::move(field)), d_(d), entries_(d * d, 0) {}

  Matrix(FieldSpec field, std::size_t d, std::vector<std::uint32_t> entries)
    : field_(std::move(field)), d_(d), entries_(std::move(entries))
  {
    if (entries_.size() != d_ * d_)
      throw ShapeMismatch("matrix needs " + std::to_string(d_ * d_) + " entries");
    for (auto e : entries_)
      if (e >= field_.order())
        throw InvalidArgument("matrix entry out of field range");
  }

  static auto identity(const FieldSpec& f, std::size_t d) -> Matrix
  {
    Matrix m(f, d);
    for (std::size_t i = 0; i < d; ++i)
      m.set(i, i, 1);
    return m;
  }

  /// Integer rows mapped through Z -> GF(p) -> F.
  static auto from_integers(const FieldSpec& f, const std::vector<std::vector<std::int64_t>>& rows) -> Matrix
  {
    const auto d = rows.size();
    Matrix m(f, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (rows[i].size() != d)
        throw ShapeMismatch("matrix rows must have length " + std::to_string(d));
      for (std::size_t j = 0; j < d; ++j)
        m.set(i, j, f.index_of_integer(rows[i][j]));
    }
    return m;
  }

  static auto from_elems(const FieldSpec& f, const std::vector<std::vector<FieldElem>>& rows) -> Matrix
  {
    const auto d = rows.size();
    Matrix m(f, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (rows[i].size() != d)
        throw ShapeMismatch("matrix rows must have length " + std::to_string(d));
      for (std::size_t j = 0; j < d; ++j) {
        if (!(rows[i][j].field() == f))
          throw ShapeMismatch("matrix entry from a different field");
        m.set(i, j, rows[i][j].index());
      }
    }
    return m;
  }

  auto field() const -> const FieldSpec& { return field_; }
  auto dim() const -> std::size_t { return d_; }
  auto raw(std::size_t i, std::size_t j) const -> std::uint32_t { return entries_[i * d_ + j]; }
  auto raw_entries() const -> std::span<const std::uint32_t> { return entries_; }
  auto set(std::size_t i, std::size_t j, std::uint32_t v) -> void { entries_[i * d_ + j] = v; }
  auto at(std::size_t i, std::size_t j) const -> FieldElem { return {field_, raw(i, j)}; }

  auto transpose() const -> Matrix
  {
    Matrix t(field_, d_);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        t.set(j, i, raw(i, j));
    return t;
  }

  friend auto operator+(const Matrix& a, const Matrix& b) -> Matrix
  {
    check_same(a, b);
    Matrix r(a.field_, a.d_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      r.entries_[i] = a.field_.add(a.entries_[i], b.entries_[i]);
    return r;
  }

  friend auto operator-(const Matrix& a, const Matrix& b) -> Matrix
  {
    check_same(a, b);
    Matrix r(a.field_, a.d_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      r.entries_[i] = a.field_.sub(a.entries_[i], b.entries_[i]);
    return r;
  }

  friend auto operator*(const Matrix& a, const Matrix& b) -> Matrix
  {
    check_same(a, b);
    const auto& f = a.field_;
    Matrix r(f, a.d_);
    for (std::size_t i = 0; i < a.d_; ++i)
      for (std::size_t j = 0; j < a.d_; ++j) {
        std::uint32_t acc = 0;
        for (std::size_t l = 0; l < a.d_; ++l)
          acc = f.add(acc, f.mul(a.raw(i, l), b.raw(l, j)));
        r.set(i, j, acc);
      }
    return r;
  }

  friend auto operator==(const Matrix& a, const Matrix& b) -> bool
  {
    return a.d_ == b.d_ && a.entries_ == b.entries_ && a.field_ == b.field_;
  }

private:
  static auto check_same(const Matrix& a, const Matrix& b) -> void
  {
    if (a.d_ != b.d_ || !(a.field_ == b.field_))
      throw ShapeMismatch("matrix operands of different shape or field");
  }

  FieldSpec field_;
  std::size_t d_;
  std::vector<std::uint32_t> entries_;
};

/// Determinant by row reduction with field inverses.
inline auto determinant(const Matrix& m) -> FieldElem
{
  const auto& f = m.field();
  const auto d = m.dim();
  std::vector<std::uint32_t> a(m.raw_entries().begin(), m.raw_entries().end());
  std::uint32_t det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot * d + col] == 0)
      ++pivot;
    if (pivot == d)
      return FieldElem::zero(f);
    if (pivot != col) {
      for (std::size_t j = 0; j < d; ++j)
        std::swap(a[pivot * d + j], a[col * d + j]);
      det = f.neg(det);
    }
    const auto pv = a[col * d + col];
    det = f.mul(det, pv);
    const auto pinv = f.inv(pv);
    for (std::size_t r = col + 1; r < d; ++r) {
      const auto factor = f.mul(a[r * d + col], pinv);
      if (factor == 0)
        continue;
      for (std::size_t j = col; j < d; ++j)
        a[r * d + j] = f.sub(a[r * d + j], f.mul(factor, a[col * d + j]));
    }
  }
  return {f, det};
}

/// Residue class modulo n.
struct Residue
{
  std::uint32_t modulus = 1;
  std::uint32_t value = 0;

  friend auto operator==(const Residue&, const Residue&) -> bool = default;
};

using Component = std::variant<FieldElem, Matrix, Residue>;

struct FieldAtom
{
  FieldSpec field;

  friend auto operator==(const FieldAtom&, const FieldAtom&) -> bool = default;
};

struct MatrixAtom
{
  std::uint32_t dim;
  FieldSpec field;

  friend auto operator==(const MatrixAtom&, const MatrixAtom&) -> bool = default;
};

struct ModIntAtom
{
  std::uint32_t modulus;

  friend auto operator==(const ModIntAtom&, const ModIntAtom&) -> bool = default;
};

using Atom = std::variant<FieldAtom, MatrixAtom, ModIntAtom>;

namespace detail {

inline auto saturating_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
{
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline auto saturating_pow(std::uint64_t base, std::uint64_t exp) -> std::uint64_t
{
  std::uint64_t r = 1;
  while (exp-- > 0)
    r = saturating_mul(r, base);
  return r;
}

/// Distinct primes and exponents of n.
inline auto factorize(std::uint64_t n) -> std::vector<std::pair<std::uint64_t, std::uint32_t>>
{
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0)
      out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

} // namespace detail

inline auto atom_size(const Atom& a) -> std::uint64_t
{
  return std::visit(
    [](const auto& x) -> std::uint64_t {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, FieldAtom>)
        return x.field.order();
      else if constexpr (std::is_same_v<T, MatrixAtom>)
        return detail::saturating_pow(x.field.order(), std::uint64_t{x.dim} * x.dim);
      else
        return x.modulus;
    },
    a);
}

/// Ordered product of atoms; the empty product is the zero ring.
class RingSpec
{
public:
  RingSpec() = default;
  explicit RingSpec(std::vector<Atom> factors) : factors_(std::move(factors))
  {
    for (const auto& a : factors_) {
      if (const auto* m = std::get_if<MatrixAtom>(&a); m && m->dim < 2)
        throw InvalidArgument("matrix factors need d >= 2");
      if (const auto* z = std::get_if<ModIntAtom>(&a); z && z->modulus < 2)
        throw InvalidArgument("Z(n) needs n >= 2");
    }
  }

  auto factors() const -> const std::vector<Atom>& { return factors_; }
  auto is_zero_ring() const -> bool { return factors_.empty(); }

  /// Number of elements, saturating at UINT64_MAX.
  auto size() const -> std::uint64_t
  {
    std::uint64_t s = 1;
    for (const auto& a : factors_)
      s = detail::saturating_mul(s, atom_size(a));
    return s;
  }

  friend auto operator==(const RingSpec&, const RingSpec&) -> bool = default;

private:
  std::vector<Atom> factors_;
};

inline auto field(std::uint64_t q) -> Atom { return FieldAtom{FieldSpec::of_order(q)}; }
inline auto matrix_ring(std::uint32_t d, std::uint64_t q) -> Atom { return MatrixAtom{d, FieldSpec::of_order(q)}; }
inline auto mod_int(std::uint32_t n) -> Atom { return ModIntAtom{n}; }

/// Element of a product ring: one component per atom.
class RingElem
{
public:
  RingElem() = default;
  explicit RingElem(std::vector<Component> components) : components_(std::move(components)) {}

  auto components() const -> const std::vector<Component>& { return components_; }
  auto component(std::size_t i) const -> const Component& { return components_.at(i); }
  auto size() const -> std::size_t { return components_.size(); }

  friend auto operator==(const RingElem&, const RingElem&) -> bool = default;

private:
  std::vector<Component> components_;
};

namespace detail {

template <typename Op>
auto componentwise(const RingElem& a, const RingElem& b, Op op) -> RingElem
{
  if (a.size() != b.size())
    throw ShapeMismatch("ring elements have different numbers of components");
  std::vector<Component> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.component(i);
    const auto& y = b.component(i);
    if (x.index() != y.index())
      throw ShapeMismatch("component kinds differ at position " + std::to_string(i));
    out.push_back(std::visit(
      [&](const auto& u) -> Component {
        using T = std::decay_t<decltype(u)>;
        const auto& v = std::get<T>(y);
        if constexpr (std::is_same_v<T, Residue>) {
          if (u.modulus != v.modulus)
            throw ShapeMismatch("residues modulo different n");
          return op(u, v);
        } else {
          return op(u, v);
        }
      },
      x));
  }
  return RingElem(std::move(out));
}

} // namespace detail

inline auto ring_add(const RingElem& a, const RingElem& b) -> RingElem
{
  return detail::componentwise(a, b, [](const auto& u, const auto& v) -> Component {
    using T = std::decay_t<decltype(u)>;
    if constexpr (std::is_same_v<T, Residue>)
      return Residue{u.modulus, static_cast<std::uint32_t>((std::uint64_t{u.value} + v.value) % u.modulus)};
    else
      return u + v;
  });
}

inline auto ring_sub(const RingElem& a, const RingElem& b) -> RingElem
{
  return detail::componentwise(a, b, [](const auto& u, const auto& v) -> Component {
    using T = std::decay_t<decltype(u)>;
    if constexpr (std::is_same_v<T, Residue>)
      return Residue{u.modulus,
                     static_cast<std::uint32_t>((std::uint64_t{u.value} + u.modulus - v.value) % u.modulus)};
    else
      return u - v;
  });
}

inline auto ring_mul(const RingElem& a, const RingElem& b) -> RingElem
{
  return detail::componentwise(a, b, [](const auto& u, const auto& v) -> Component {
    using T = std::decay_t<decltype(u)>;
    if constexpr (std::is_same_v<T, Residue>)
      return Residue{u.modulus, static_cast<std::uint32_t>((std::uint64_t{u.value} * v.value) % u.modulus)};
    else
      return u * v;
  });
}

inline auto component_is_unit(const Component& c) -> bool
{
  return std::visit(
    [](const auto& x) -> bool {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, FieldElem>)
        return !x.is_zero();
      else if constexpr (std::is_same_v<T, Matrix>)
        return !determinant(x).is_zero();
      else
        return std::gcd(x.value, x.modulus) == 1;
    },
    c);
}

/// True iff every component is a unit. The zero ring's only element counts as a unit (1 = 0).
inline auto is_unit(const RingElem& a) -> bool
{
  for (const auto& c : a.components())
    if (!component_is_unit(c))
      return false;
  return true;
}

inline auto atom_zero(const Atom& a) -> Component
{
  return std::visit(
    [](const auto& x) -> Component {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, FieldAtom>)
        return FieldElem::zero(x.field);
      else if constexpr (std::is_same_v<T, MatrixAtom>)
        return Matrix(x.field, x.dim);
      else
        return Residue{x.modulus, 0};
    },
    a);
}

inline auto atom_one(const Atom& a) -> Component
{
  return std::visit(
    [](const auto& x) -> Component {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, FieldAtom>)
        return FieldElem::one(x.field);
      else if constexpr (std::is_same_v<T, MatrixAtom>)
        return Matrix::identity(x.field, x.dim);
      else
        return Residue{x.modulus, 1 % x.modulus};
    },
    a);
}

inline auto ring_zero(const RingSpec& spec) -> RingElem
{
  std::vector<Component> c;
  for (const auto& a : spec.factors())
    c.push_back(atom_zero(a));
  return RingElem(std::move(c));
}

inline auto ring_one(const RingSpec& spec) -> RingElem
{
  std::vector<Component> c;
  for (const auto& a : spec.factors())
    c.push_back(atom_one(a));
  return RingElem(std::move(c));
}

/// Whether a component has exactly the shape an atom prescribes.
inline auto component_fits(const Atom& atom, const Component& c) -> bool
{
  if (const auto* f = std::get_if<FieldAtom>(&atom)) {
    const auto* e = std::get_if<FieldElem>(&c);
    return e && e->field() == f->field;
  }
  if (const auto* m = std::get_if<MatrixAtom>(&atom)) {
    const auto* e = std::get_if<Matrix>(&c);
    return e && e->dim() == m->dim && e->field() == m->field;
  }
  const auto& z = std::get<ModIntAtom>(atom);
  const auto* e = std::get_if<Residue>(&c);
  return e && e->modulus == z.modulus && e->value < z.modulus;
}

inline auto belongs_to(const RingSpec& spec, const RingElem& x) -> bool
{
  if (x.size() != spec.factors().size())
    return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!component_fits(spec.factors()[i], x.component(i)))
      return false;
  return true;
}

inline auto require_belongs(const RingSpec& spec, const RingElem& x) -> void
{
  if (!belongs_to(spec, x))
    throw ShapeMismatch("element does not belong to the given ring");
}

/**
 * Mixed-radix numbering of the elements of a RingSpec. Each atom contributes
 * coordinates (1 for a field or Z/n, d^2 for a matrix ring); the first
 * coordinate is the most significant digit.
 */
class ElementCoder
{
public:
  explicit ElementCoder(RingSpec spec, std::uint64_t max_size = default_max_ring_size) : spec_(std::move(spec))
  {
    const auto n = spec_.size();
    if (n > max_size)
      throw SizeCapExceeded("ring has " + (n == std::numeric_limits<std::uint64_t>::max()
                                             ? std::string("too many")
                                             : std::to_string(n)) +
                            " elements; the cap is " + std::to_string(max_size));
    size_ = n;
    for (const auto& a : spec_.factors()) {
      std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, FieldAtom>)
            coords_.push_back({x.field.order(), x.field});
          else if constexpr (std::is_same_v<T, MatrixAtom>)
            for (std::uint32_t i = 0; i < x.dim * x.dim; ++i)
              coords_.push_back({x.field.order(), x.field});
          else
            coords_.push_back({x.modulus, std::nullopt});
        },
        a);
    }
  }

  auto spec() const -> const RingSpec& { return spec_; }
  auto size() const -> std::uint64_t { return size_; }
  auto coordinate_count() const -> std::size_t { return coords_.size(); }
  auto radix(std::size_t c) const -> std::uint32_t { return coords_[c].radix; }

  /// Digits of an index, most significant first.
  auto digits(std::uint64_t index) const -> std::vector<std::uint32_t>
  {
    std::vector<std::uint32_t> d(coords_.size());
    for (std::size_t c = coords_.size(); c-- > 0;) {
      d[c] = static_cast<std::uint32_t>(index % coords_[c].radix);
      index /= coords_[c].radix;
    }
    return d;
  }

  auto index_of_digits(std::span<const std::uint32_t> d) const -> std::uint64_t
  {
    std::uint64_t idx = 0;
    for (std::size_t c = 0; c < coords_.size(); ++c)
      idx = idx * coords_[c].radix + d[c];
    return idx;
  }

  /// Digit of a - b in coordinate c.
  auto sub_digit(std::size_t c, std::uint32_t a, std::uint32_t b) const -> std::uint32_t
  {
    const auto& co = coords_[c];
    if (co.field)
      return co.field->sub(a, b);
    return (a + co.radix - b) % co.radix;
  }

  auto decode(std::uint64_t index) const -> RingElem
  {
    if (index >= size_)
      throw InvalidArgument("element index out of range");
    const auto d = digits(index);
    std::vector<Component> comps;
    std::size_t c = 0;
    for (const auto& a : spec_.factors()) {
      std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, FieldAtom>) {
            comps.emplace_back(FieldElem(x.field, d[c++]));
          } else if constexpr (std::is_same_v<T, MatrixAtom>) {
            std::vector<std::uint32_t> e(d.begin() + static_cast<std::ptrdiff_t>(c),
                                         d.begin() + static_cast<std::ptrdiff_t>(c + x.dim * x.dim));
            c += x.dim * x.dim;
            comps.emplace_back(Matrix(x.field, x.dim, std::move(e)));
          } else {
            comps.emplace_back(Residue{x.modulus, d[c++]});
          }
        },
        a);
    }
    return RingElem(std::move(comps));
  }

  auto encode(const RingElem& x) const -> std::uint64_t
  {
    require_belongs(spec_, x);
    std::vector<std::uint32_t> d;
    d.reserve(coords_.size());
    for (const auto& comp : x.components()) {
      std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FieldElem>)
            d.push_back(v.index());
          else if constexpr (std::is_same_v<T, Matrix>)
            d.insert(d.end(), v.raw_entries().begin(), v.raw_entries().end());
          else
            d.push_back(v.value);
        },
        comp);
    }
    return index_of_digits(d);
  }

private:
  struct Coordinate
  {
    std::uint32_t radix;
    std::optional<FieldSpec> field;
  };

  RingSpec spec_;
  std::uint64_t size_ = 0;
  std::vector<Coordinate> coords_;
};

/// All elements in mixed-radix order, zero first.
inline auto ring_enumerate(const RingSpec& spec, std::uint64_t max_size = default_max_ring_size)
  -> std::vector<RingElem>
{
  const ElementCoder coder(spec, max_size);
  std::vector<RingElem> out;
  out.reserve(coder.size());
  for (std::uint64_t i = 0; i < coder.size(); ++i)
    out.push_back(coder.decode(i));
  return out;
}

/// |GL_d(GF(q))| = prod_{i<d} (q^d - q^i).
inline auto general_linear_order(std::uint32_t d, std::uint64_t q) -> std::uint64_t
{
  const auto qd = detail::saturating_pow(q, d);
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < d; ++i)
    r = detail::saturating_mul(r, qd - detail::saturating_pow(q, i));
  return r;
}

inline auto euler_phi(std::uint64_t n) -> std::uint64_t
{
  std::uint64_t r = n;
  for (const auto& [p, e] : detail::factorize(n))
    r = r / p * (p - 1);
  return r;
}

/// |R^x| from the closed forms per atom.
inline auto unit_count(const RingSpec& spec) -> std::uint64_t
{
  std::uint64_t r = 1;
  for (const auto& a : spec.factors()) {
    const auto u = std::visit(
      [](const auto& x) -> std::uint64_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FieldAtom>)
          return x.field.order() - 1;
        else if constexpr (std::is_same_v<T, MatrixAtom>)
          return general_linear_order(x.dim, x.field.order());
        else
          return euler_phi(x.modulus);
      },
      a);
    r = detail::saturating_mul(r, u);
  }
  return r;
}

/// Artin-Wedderburn data of R / Rad(R) together with |Rad(R)|.
struct SemisimpleForm
{
  std::vector<std::uint32_t> field_orders;                         // ascending
  std::vector<std::pair<std::uint32_t, std::uint32_t>> matrix_factors; // (d, q), ascending
  std::uint64_t radical_size = 1;

  auto is_zero_ring() const -> bool { return field_orders.empty() && matrix_factors.empty(); }

  friend auto operator==(const SemisimpleForm&, const SemisimpleForm&) -> bool = default;
};

inline auto semisimplify(const RingSpec& spec) -> SemisimpleForm
{
  SemisimpleForm ss;
  for (const auto& a : spec.factors()) {
    std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FieldAtom>) {
          ss.field_orders.push_back(x.field.order());
        } else if constexpr (std::is_same_v<T, MatrixAtom>) {
          ss.matrix_factors.emplace_back(x.dim, x.field.order());
        } else {
          for (const auto& [p, e] : detail::factorize(x.modulus)) {
            ss.field_orders.push_back(static_cast<std::uint32_t>(p));
            ss.radical_size = detail::saturating_mul(ss.radical_size, detail::saturating_pow(p, e - 1));
          }
        }
      },
      a);
  }
  std::sort(ss.field_orders.begin(), ss.field_orders.end());
  std::sort(ss.matrix_factors.begin(), ss.matrix_factors.end());
  return ss;
}

/// The semisimple ring itself: field atoms (ascending) followed by matrix atoms.
inline auto to_ring_spec(const SemisimpleForm& ss) -> RingSpec
{
  std::vector<Atom> atoms;
  for (auto q : ss.field_orders)
    atoms.push_back(field(q));
  for (auto [d, q] : ss.matrix_factors)
    atoms.push_back(matrix_ring(d, q));
  return RingSpec(std::move(atoms));
}

inline auto semisimple_size(const SemisimpleForm& ss) -> std::uint64_t
{
  std::uint64_t r = 1;
  for (auto q : ss.field_orders)
    r = detail::saturating_mul(r, q);
  for (auto [d, q] : ss.matrix_factors)
    r = detail::saturating_mul(r, detail::saturating_pow(q, std::uint64_t{d} * d));
  return r;
}

/**
 * Writes m = U + V with U and V invertible. Candidates U are tried in
 * enumeration order of M_d(F); the first U with m - U invertible wins.
 */
inline auto sum_of_two_units_witness(const Matrix& m) -> std::pair<Matrix, Matrix>
{
  if (m.dim() < 2)
    throw InvalidArgument("sum-of-two-units decomposition needs d >= 2");
  const auto& f = m.field();
  const auto d = m.dim();
  const auto cells = d * d;
  std::vector<std::uint32_t> digits(cells, 0);
  for (;;) {
    Matrix u(f, d, digits);
    if (!determinant(u).is_zero()) {
      auto v = m - u;
      if (!determinant(v).is_zero())
        return {std::move(u), std::move(v)};
    }
    std::size_t c = cells;
    while (c-- > 0) {
      if (++digits[c] < f.order())
        break;
      digits[c] = 0;
    }
    if (c == static_cast<std::size_t>(-1))
      break;
  }
  throw InternalError("matrix is not a sum of two units");
}

} // namespace ucg
