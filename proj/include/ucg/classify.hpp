#pragma once

/**
 * Perfectness of unitary Cayley graphs decided from the Artin-Wedderburn
 * shape of R/Rad(R), with a certified induced 5-cycle for every ring whose
 * graph is not perfect.
 *
 * Witnesses live in the semisimple ring, laid out as to_ring_spec() orders
 * it: field factors by ascending order, then matrix factors.
 */

#include "error.hpp"
#include "finfield.hpp"
#include "ring.hpp"
#include "text.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ucg {

enum class WitnessFamily
{
  matrix_char_odd,   // M_2(F), char F != 2
  matrix_char2,      // M_2(F), char F = 2, F != GF(2)
  matrix_f2_large,   // M_d(GF(2)), d >= 3
  matrix_diagonal,   // M_d(F), d >= 3, |F| >= 3, via diagonal matrices
  three_fields,      // F_1 x F_2 x F_3, all orders >= 3
  m2f2_times_field,  // M_2(GF(2)) x F, F != GF(2)
  m2f2_squared,      // M_2(GF(2)) x M_2(GF(2))
};

inline auto family_name(WitnessFamily f) -> std::string
{
  switch (f) {
  case WitnessFamily::matrix_char_odd: return "matrix-char-odd";
  case WitnessFamily::matrix_char2: return "matrix-char2";
  case WitnessFamily::matrix_f2_large: return "matrix-f2-large";
  case WitnessFamily::matrix_diagonal: return "matrix-diagonal";
  case WitnessFamily::three_fields: return "three-fields";
  case WitnessFamily::m2f2_times_field: return "m2f2-times-field";
  case WitnessFamily::m2f2_squared: return "m2f2-squared";
  }
  return "unknown";
}

enum class VerdictReason
{
  zero_ring,
  bipartite_f2_factor,
  few_field_factors_no_matrix,
  matrix_m2f2_alone,
  witness_found,
};

inline auto reason_name(VerdictReason r) -> std::string
{
  switch (r) {
  case VerdictReason::zero_ring: return "ZeroRing";
  case VerdictReason::bipartite_f2_factor: return "BipartiteF2Factor";
  case VerdictReason::few_field_factors_no_matrix: return "FewFieldFactorsNoMatrix";
  case VerdictReason::matrix_m2f2_alone: return "MatrixM2F2Alone";
  case VerdictReason::witness_found: return "WitnessFound";
  }
  return "unknown";
}

struct Witness
{
  RingSpec ring;
  std::vector<RingElem> elements;
  WitnessFamily family;
};

struct Verdict
{
  bool perfect = true;
  VerdictReason reason = VerdictReason::zero_ring;
  std::optional<Witness> witness;
};

// ---------------------------------------------------------------------------
// Algebraic verification

/// Annotation of one ordered difference x_i - x_j of a candidate cycle.
struct DifferenceCheck
{
  std::size_t i;
  std::size_t j;
  bool unit;
  bool expected_unit;

  auto ok() const -> bool { return unit == expected_unit; }
};

/// All ordered differences of a cyclic sequence, with the expected unit status.
inline auto difference_checks(const RingSpec& spec, std::span<const RingElem> elems) -> std::vector<DifferenceCheck>
{
  for (const auto& e : elems)
    require_belongs(spec, e);
  const auto k = elems.size();
  std::vector<DifferenceCheck> out;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        continue;
      const bool consecutive = (i + 1) % k == j || (j + 1) % k == i;
      out.push_back({i, j, is_unit(ring_sub(elems[i], elems[j])), consecutive});
    }
  return out;
}

/**
 * True iff the elements are pairwise distinct, cyclically consecutive
 * differences are units and all other differences are not: an induced
 * k-cycle of G_R, checked without building the graph.
 */
inline auto verify_induced_cycle(const RingSpec& spec, std::span<const RingElem> elems) -> bool
{
  const auto k = elems.size();
  if (k < 4)
    return false;
  for (const auto& e : elems)
    require_belongs(spec, e);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (elems[i] == elems[j])
        return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (is_unit(ring_sub(elems[i], elems[j])) != consecutive)
        return false;
    }
  return true;
}

inline auto verify_witness(const RingSpec& spec, std::span<const RingElem> elems) -> bool
{
  return elems.size() == 5 && verify_induced_cycle(spec, elems);
}

/// Cyclically consecutive differences are all units; repeats allowed.
inline auto verify_closed_walk(const RingSpec& spec, std::span<const RingElem> walk) -> bool
{
  if (walk.size() < 2)
    return false;
  for (const auto& e : walk)
    require_belongs(spec, e);
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (!is_unit(ring_sub(walk[i], walk[(i + 1) % walk.size()])))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Explicit cycle families

namespace detail {

inline auto single(Component c) -> RingElem { return RingElem({std::move(c)}); }

inline auto wrap_matrices(std::vector<Matrix> ms) -> std::vector<RingElem>
{
  std::vector<RingElem> out;
  for (auto& m : ms)
    out.push_back(single(std::move(m)));
  return out;
}

inline auto m2f2(std::vector<std::vector<std::int64_t>> rows) -> Matrix
{
  static const auto f2 = FieldSpec::of_order(2);
  return Matrix::from_integers(f2, rows);
}

/// Jordan block: ones on the first superdiagonal.
inline auto jordan_block(const FieldSpec& f, std::size_t d) -> Matrix
{
  Matrix b(f, d);
  for (std::size_t i = 0; i + 1 < d; ++i)
    b.set(i, i + 1, 1);
  return b;
}

/// Upper-left 2x2 block of ones, zeros elsewhere.
inline auto corner_ones(const FieldSpec& f, std::size_t d) -> Matrix
{
  Matrix a(f, d);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      a.set(i, j, 1);
  return a;
}

} // namespace detail

/// Single-factor elements of M_d(F), one per matrix.
inline auto as_ring_elements(std::vector<Matrix> ms) -> std::vector<RingElem>
{
  return detail::wrap_matrices(std::move(ms));
}

/// B_n + B_n^T over GF(2).
inline auto symmetric_jordan(std::size_t n) -> Matrix
{
  const auto f2 = FieldSpec::of_order(2);
  const auto b = detail::jordan_block(f2, n);
  return b + b.transpose();
}

/// A + B + B^T over GF(2) with A the corner block and B the Jordan block of size d.
inline auto corner_plus_symmetric_jordan(std::size_t d) -> Matrix
{
  const auto f2 = FieldSpec::of_order(2);
  const auto b = detail::jordan_block(f2, d);
  return detail::corner_ones(f2, d) + b + b.transpose();
}

/// The induced 5-cycle of G_{M_2(GF(3))} found by computer search.
inline auto m2f3_explicit_cycle() -> std::vector<Matrix>
{
  const auto f3 = FieldSpec::of_order(3);
  return {
    Matrix::from_integers(f3, {{0, 0}, {0, 0}}),
    Matrix::from_integers(f3, {{2, 1}, {1, 0}}),
    Matrix::from_integers(f3, {{2, 2}, {2, 2}}),
    Matrix::from_integers(f3, {{2, 1}, {1, 2}}),
    Matrix::from_integers(f3, {{1, 2}, {2, 2}}),
  };
}

/// M_2(F), char F odd; integer entries read through Z -> F.
inline auto witness_matrix_char_odd(const FieldSpec& f) -> std::vector<Matrix>
{
  if (f.characteristic() == 2)
    throw InvalidArgument("the odd-characteristic family needs char F != 2");
  return {
    Matrix::from_integers(f, {{0, 0}, {0, 0}}),
    Matrix::from_integers(f, {{2, 1}, {1, 0}}),
    Matrix::from_integers(f, {{-2, -2}, {-1, -1}}),
    Matrix::from_integers(f, {{-1, -2}, {-1, -2}}),
    Matrix::from_integers(f, {{-2, -1}, {-1, -1}}),
  };
}

/// M_2(F), char F = 2, |F| > 2, with z the first element outside {0, 1}.
inline auto witness_matrix_char2(const FieldSpec& f) -> std::vector<Matrix>
{
  if (f.characteristic() != 2 || f.order() <= 2)
    throw InvalidArgument("the characteristic-2 family needs char F = 2 and F != GF(2)");
  const auto z = first_outside_zero_one(f).index();
  const auto z1 = f.add(z, 1);
  auto m = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    return Matrix(f, 2, {a, b, c, d});
  };
  return {m(0, 0, 0, 0), m(1, 0, 1, 1), m(z1, 0, 1, 0), m(1, z1, 1, z1), m(z1, 1, 1, 1)};
}

/// M_d(GF(2)), d >= 3: 0, I + A, A, I + A + B^T, I + B.
inline auto witness_matrix_f2_large(std::size_t d) -> std::vector<Matrix>
{
  if (d < 3)
    throw InvalidArgument("the M_d(GF(2)) family needs d >= 3");
  const auto f2 = FieldSpec::of_order(2);
  const auto i = Matrix::identity(f2, d);
  const auto a = detail::corner_ones(f2, d);
  const auto b = detail::jordan_block(f2, d);
  return {Matrix(f2, d), i + a, a, i + a + b.transpose(), i + b};
}

/// R_1 x R_2 x R_3 with all orders >= 3: (0,0,0), (1,1,1), (0,a,b), (1,1,0), (c,a,1).
inline auto witness_three_fields(const FieldSpec& f1, const FieldSpec& f2, const FieldSpec& f3)
  -> std::vector<RingElem>
{
  if (f1.order() < 3 || f2.order() < 3 || f3.order() < 3)
    throw InvalidArgument("the three-field family needs all orders >= 3");
  const auto a = first_outside_zero_one(f2);
  const auto b = first_outside_zero_one(f3);
  const auto c = first_outside_zero_one(f1);
  auto t = [](FieldElem x, FieldElem y, FieldElem z) {
    return RingElem({std::move(x), std::move(y), std::move(z)});
  };
  const auto o1 = FieldElem::zero(f1), o2 = FieldElem::zero(f2), o3 = FieldElem::zero(f3);
  const auto e1 = FieldElem::one(f1), e2 = FieldElem::one(f2), e3 = FieldElem::one(f3);
  return {t(o1, o2, o3), t(e1, e2, e3), t(o1, a, b), t(e1, e2, o3), t(c, a, e3)};
}

/// M_2(GF(2)) x F with F != GF(2); alpha is the first element outside {0, 1}.
inline auto witness_m2f2_times_field(const FieldSpec& f) -> std::vector<RingElem>
{
  if (f.order() <= 2)
    throw InvalidArgument("the M_2(GF(2)) x F family needs F != GF(2)");
  using detail::m2f2;
  const auto alpha = first_outside_zero_one(f);
  const auto zero = FieldElem::zero(f), one = FieldElem::one(f);
  return {
    RingElem({m2f2({{0, 0}, {0, 0}}), zero}),
    RingElem({m2f2({{1, 1}, {0, 1}}), one}),
    RingElem({m2f2({{0, 0}, {1, 1}}), alpha}),
    RingElem({m2f2({{1, 0}, {0, 0}}), zero}),
    RingElem({m2f2({{1, 1}, {1, 0}}), alpha}),
  };
}

inline auto witness_m2f2_squared() -> std::vector<RingElem>
{
  using detail::m2f2;
  return {
    RingElem({m2f2({{0, 0}, {0, 0}}), m2f2({{0, 1}, {1, 1}})}),
    RingElem({m2f2({{1, 0}, {1, 1}}), m2f2({{1, 0}, {0, 1}})}),
    RingElem({m2f2({{1, 1}, {0, 1}}), m2f2({{1, 1}, {1, 1}})}),
    RingElem({m2f2({{1, 0}, {1, 1}}), m2f2({{1, 0}, {0, 0}})}),
    RingElem({m2f2({{1, 1}, {0, 1}}), m2f2({{0, 0}, {0, 1}})}),
  };
}

// ---------------------------------------------------------------------------
// Lifting through product factors

/// A sequence of elements of one ring: the anchor's induced cycle or a closed walk.
struct CycleBlock
{
  RingSpec ring;
  std::vector<RingElem> sequence;
};

struct LiftedCycle
{
  RingSpec ring;                  // product of the block rings, in block order
  std::vector<RingElem> elements; // componentwise tuples
};

/**
 * Combines an induced k-cycle in the anchor block with closed k-walks in the
 * other blocks into an induced k-cycle of the product ring. Preconditions are
 * checked, not assumed.
 */
inline auto lift_cycle(std::span<const CycleBlock> blocks, std::size_t anchor_index) -> LiftedCycle
{
  if (anchor_index >= blocks.size())
    throw InvalidArgument("anchor index out of range");
  const auto k = blocks[anchor_index].sequence.size();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    if (blk.sequence.size() != k)
      throw InvalidArgument("block " + std::to_string(b) + " has length " + std::to_string(blk.sequence.size()) +
                            ", expected " + std::to_string(k));
    if (b == anchor_index ? !verify_induced_cycle(blk.ring, blk.sequence)
                          : !verify_closed_walk(blk.ring, blk.sequence))
      throw InvalidArgument(b == anchor_index ? "anchor block is not an induced cycle"
                                              : "block " + std::to_string(b) + " is not a closed walk");
  }
  std::vector<Atom> atoms;
  for (const auto& blk : blocks)
    atoms.insert(atoms.end(), blk.ring.factors().begin(), blk.ring.factors().end());
  LiftedCycle out{RingSpec(std::move(atoms)), {}};
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Component> comps;
    for (const auto& blk : blocks)
      comps.insert(comps.end(), blk.sequence[j].components().begin(), blk.sequence[j].components().end());
    out.elements.emplace_back(std::move(comps));
  }
  return out;
}

/// Matrices above this many elements get an explicit triangle instead of a search.
inline constexpr std::uint64_t triangle_search_limit = 1 << 16;

/**
 * A triangle {0, t1, t2} in the unitary Cayley graph of a single atom with one,
 * i.e. a field of order >= 3 or any matrix ring.
 */
inline auto atom_triangle(const Atom& atom) -> std::vector<Component>
{
  if (const auto* fa = std::get_if<FieldAtom>(&atom)) {
    if (fa->field.order() < 3)
      throw InvalidArgument("GF(2) has no triangle");
    return {FieldElem::zero(fa->field), FieldElem::one(fa->field), first_outside_zero_one(fa->field)};
  }
  if (const auto* ma = std::get_if<MatrixAtom>(&atom)) {
    const auto& f = ma->field;
    const auto d = ma->dim;
    const auto id = Matrix::identity(f, d);
    if (atom_size(atom) <= triangle_search_limit) {
      auto [u, v] = sum_of_two_units_witness(id);
      return {Matrix(f, d), std::move(u), id};
    }
    // X and X - I both invertible: cI with c outside {0, 1}, or over GF(2) the
    // companion matrix of x^d + x + 1 (no root at 0 or 1).
    Matrix x(f, d);
    if (f.order() >= 3) {
      for (std::size_t i = 0; i < d; ++i)
        x.set(i, i, 2);
    } else {
      for (std::size_t i = 0; i + 1 < d; ++i)
        x.set(i + 1, i, 1);
      x.set(0, d - 1, 1);
      x.set(1, d - 1, 1);
    }
    return {Matrix(f, d), id, std::move(x)};
  }
  throw InvalidArgument("residue rings are not semisimple atoms");
}

/// t0, t1, t0, t1, t2 around atom_triangle().
inline auto atom_closed_five_walk(const Atom& atom) -> std::vector<RingElem>
{
  const auto t = atom_triangle(atom);
  return {detail::single(t[0]), detail::single(t[1]), detail::single(t[0]), detail::single(t[1]),
          detail::single(t[2])};
}

// ---------------------------------------------------------------------------
// Classification

/**
 * An induced 5-cycle in G_{R^ss} for a non-perfect semisimple form. One
 * factor (or a small group of factors) carries an explicit cycle family and
 * every other factor contributes a closed 5-walk around a triangle.
 */
inline auto witness_for(const SemisimpleForm& ss) -> Witness
{
  const auto spec = to_ring_spec(ss);
  const auto& atoms = spec.factors();
  const auto s = ss.field_orders.size();
  const auto r = ss.matrix_factors.size();

  for (auto q : ss.field_orders)
    if (q == 2)
      throw InvalidArgument("a GF(2) factor makes the graph bipartite; no witness exists");

  std::vector<std::size_t> anchor_atoms;
  std::vector<RingElem> anchor_cycle;
  WitnessFamily family{};

  std::optional<std::size_t> big_matrix;
  for (std::size_t m = 0; m < r; ++m)
    if (ss.matrix_factors[m] != std::pair<std::uint32_t, std::uint32_t>{2, 2}) {
      big_matrix = s + m;
      break;
    }

  if (big_matrix) {
    const auto& ma = std::get<MatrixAtom>(atoms[*big_matrix]);
    const auto& f = ma.field;
    anchor_atoms = {*big_matrix};
    if (ma.dim == 2 && f.characteristic() != 2) {
      family = WitnessFamily::matrix_char_odd;
      anchor_cycle = detail::wrap_matrices(witness_matrix_char_odd(f));
    } else if (ma.dim == 2) {
      family = WitnessFamily::matrix_char2;
      anchor_cycle = detail::wrap_matrices(witness_matrix_char2(f));
    } else if (f.order() == 2) {
      family = WitnessFamily::matrix_f2_large;
      anchor_cycle = detail::wrap_matrices(witness_matrix_f2_large(ma.dim));
    } else {
      // F^d sits inside M_d(F) as diagonal matrices; lift the three-field cycle
      // over the remaining diagonal coordinates and read it back as matrices.
      family = WitnessFamily::matrix_diagonal;
      std::vector<CycleBlock> blocks;
      const RingSpec f3({FieldAtom{f}, FieldAtom{f}, FieldAtom{f}});
      blocks.push_back({f3, witness_three_fields(f, f, f)});
      const RingSpec f1({FieldAtom{f}});
      for (std::size_t i = 3; i < ma.dim; ++i)
        blocks.push_back({f1, atom_closed_five_walk(FieldAtom{f})});
      const auto diag = lift_cycle(blocks, 0);
      for (const auto& e : diag.elements) {
        Matrix m(f, ma.dim);
        for (std::size_t i = 0; i < ma.dim; ++i)
          m.set(i, i, std::get<FieldElem>(e.component(i)).index());
        anchor_cycle.push_back(detail::single(std::move(m)));
      }
    }
  } else if (s >= 3) {
    family = WitnessFamily::three_fields;
    anchor_atoms = {0, 1, 2};
    anchor_cycle = witness_three_fields(std::get<FieldAtom>(atoms[0]).field, std::get<FieldAtom>(atoms[1]).field,
                                        std::get<FieldAtom>(atoms[2]).field);
  } else if (r >= 1 && s >= 1) {
    family = WitnessFamily::m2f2_times_field;
    anchor_atoms = {s, 0};
    anchor_cycle = witness_m2f2_times_field(std::get<FieldAtom>(atoms[0]).field);
  } else if (r >= 2) {
    family = WitnessFamily::m2f2_squared;
    anchor_atoms = {s, s + 1};
    anchor_cycle = witness_m2f2_squared();
  } else {
    throw InvalidArgument("semisimple form " + render(ss) + " has a perfect unitary Cayley graph");
  }

  // Blocks: the anchor atoms as one block, then every other atom on its own.
  std::vector<CycleBlock> blocks;
  std::vector<Atom> anchor_ring;
  for (auto i : anchor_atoms)
    anchor_ring.push_back(atoms[i]);
  blocks.push_back({RingSpec(std::move(anchor_ring)), std::move(anchor_cycle)});
  std::vector<std::size_t> position = anchor_atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (std::find(anchor_atoms.begin(), anchor_atoms.end(), i) != anchor_atoms.end())
      continue;
    blocks.push_back({RingSpec({atoms[i]}), atom_closed_five_walk(atoms[i])});
    position.push_back(i);
  }
  const auto lifted = lift_cycle(blocks, 0);

  // Put components back in canonical atom order.
  Witness w{spec, {}, family};
  for (const auto& e : lifted.elements) {
    std::vector<Component> comps(atoms.size(), Component{Residue{}});
    for (std::size_t c = 0; c < position.size(); ++c)
      comps[position[c]] = e.component(c);
    w.elements.emplace_back(std::move(comps));
  }
  return w;
}

/**
 * Perfect iff R^ss is the zero ring, has a GF(2) field factor, is
 * M_2(GF(2)) alone, or is a product of at most two fields. Conditions are
 * tried in that order.
 */
inline auto classify(const SemisimpleForm& ss) -> Verdict
{
  if (ss.is_zero_ring())
    return {true, VerdictReason::zero_ring, std::nullopt};
  for (auto q : ss.field_orders)
    if (q == 2)
      return {true, VerdictReason::bipartite_f2_factor, std::nullopt};
  if (ss.field_orders.empty() && ss.matrix_factors.size() == 1 &&
      ss.matrix_factors[0] == std::pair<std::uint32_t, std::uint32_t>{2, 2})
    return {true, VerdictReason::matrix_m2f2_alone, std::nullopt};
  if (ss.matrix_factors.empty() && ss.field_orders.size() <= 2)
    return {true, VerdictReason::few_field_factors_no_matrix, std::nullopt};

  auto w = witness_for(ss);
  if (!verify_witness(w.ring, w.elements))
    throw InternalError("generated witness for " + render(ss) + " does not verify");
  return {false, VerdictReason::witness_found, std::move(w)};
}

inline auto classify(const RingSpec& spec) -> Verdict { return classify(semisimplify(spec)); }

/**
 * Witness document: '#' header lines with the family and the 20 ordered
 * difference annotations, then one element per line. Parses back with
 * parse_element_list().
 */
inline auto render_witness(const Witness& w) -> std::string
{
  std::string out = "# ring: " + render(w.ring) + "\n# family: " + family_name(w.family) + "\n";
  for (const auto& c : difference_checks(w.ring, w.elements))
    out += "# r" + std::to_string(c.i + 1) + " - r" + std::to_string(c.j + 1) + ": " +
           (c.unit ? "unit" : "non-unit") + (c.ok() ? "" : "  (MISMATCH)") + "\n";
  for (const auto& e : w.elements)
    out += render(e) + "\n";
  return out;
}

} // namespace ucg
