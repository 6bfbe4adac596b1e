#pragma once

/**
 * The end-to-end check corpus shared by `ucg selftest` and the acceptance
 * test binary. Each criterion runs independently and reports pass/fail with a
 * one-line detail.
 */

#include "classify.hpp"
#include "graph.hpp"
#include "holes.hpp"
#include "isomorphism.hpp"
#include "ring.hpp"
#include "text.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ucg::selftest {

struct Options
{
  std::uint64_t max_ring_size = default_max_ring_size;
  std::size_t oracle_cap = default_oracle_cap;
  std::optional<Clock::duration> time_budget;
  /// Negative control: flips the first classifier verdict in the agreement check.
  bool inject_fault = false;
  std::uint64_t seed = 20241018;
  /// Receives one row per corpus case when set.
  std::ostream* table = nullptr;
};

struct CriterionResult
{
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

inline auto prime_power_orders(std::uint64_t limit) -> std::vector<std::uint32_t>
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= limit; ++q)
    if (ucg::detail::prime_power_decompose(q).first != 0)
      out.push_back(q);
  return out;
}

/// Agreement corpus: single fields, 2-4 field products and the small matrix cases.
inline auto agreement_corpus(std::uint64_t max_size) -> std::vector<std::string>
{
  std::vector<std::string> out;
  for (auto q : prime_power_orders(81))
    if (q <= max_size)
      out.push_back("GF(" + std::to_string(q) + ")");
  const std::vector<std::uint32_t> orders{2, 3, 4, 5, 7, 8, 9};
  std::vector<std::uint32_t> pick;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t size) {
    if (pick.size() >= 2) {
      std::string s;
      for (std::size_t i = 0; i < pick.size(); ++i)
        s += (i ? " x GF(" : "GF(") + std::to_string(pick[i]) + ")";
      out.push_back(s);
    }
    if (pick.size() == 4)
      return;
    for (std::size_t i = from; i < orders.size(); ++i) {
      const auto next = size * orders[i];
      if (next > 300 || next > max_size)
        break;
      pick.push_back(orders[i]);
      rec(i, next);
      pick.pop_back();
    }
  };
  rec(0, 1);
  for (const auto* s : {"M(2,GF(2))", "M(2,GF(3))", "M(2,GF(4))", "M(2,GF(2)) x GF(2)", "M(2,GF(2)) x GF(3)",
                        "M(2,GF(2)) x GF(4)"})
    if (parse_ring_spec(s).size() <= max_size)
      out.push_back(s);
  return out;
}

namespace detail {

inline auto seconds_since(Clock::time_point t0) -> double
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline auto verdict_word(bool perfect) -> const char* { return perfect ? "perfect" : "not-perfect"; }

inline auto random_closed_walk(const Graph& g, std::size_t k, std::mt19937_64& rng) -> std::vector<std::size_t>
{
  std::uniform_int_distribution<std::size_t> pick_vertex(0, g.order() - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::size_t> walk{pick_vertex(rng)};
    bool stuck = false;
    while (walk.size() + 1 < k) {
      std::vector<std::size_t> nb;
      g.neighbors(walk.back()).for_each([&](std::size_t v) { nb.push_back(v); });
      if (nb.empty()) {
        stuck = true;
        break;
      }
      walk.push_back(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
    }
    if (stuck)
      continue;
    const auto closers = g.neighbors(walk.back()) & g.neighbors(walk.front());
    std::vector<std::size_t> c;
    closers.for_each([&](std::size_t v) { c.push_back(v); });
    if (c.empty())
      continue;
    walk.push_back(c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)]);
    return walk;
  }
  throw InternalError("no random closed walk found");
}

} // namespace detail

// 1. classify(semisimplify(spec)) agrees with the brute-force oracle.
inline auto check_agreement(const Options& opt) -> CriterionResult
{
  const auto t0 = Clock::now();
  std::size_t cases = 0, perfect = 0;
  bool flipped = false;
  for (const auto& text : agreement_corpus(std::min<std::uint64_t>(opt.max_ring_size, 300))) {
    const auto spec = parse_ring_spec(text);
    const auto verdict = classify(spec);
    auto claimed = verdict.perfect;
    if (opt.inject_fault && !flipped) {
      claimed = !claimed;
      flipped = true;
    }
    const auto g = build_unitary_cayley(spec, opt.max_ring_size);
    const auto oracle = is_perfect_oracle(g, {opt.oracle_cap, opt.time_budget});
    ++cases;
    std::string problem;
    if (oracle.answer == OracleAnswer::unknown)
      problem = "oracle ran out of time";
    else if ((oracle.answer == OracleAnswer::perfect) != claimed)
      problem = std::string("classifier says ") + detail::verdict_word(claimed) + ", oracle says " +
                detail::verdict_word(oracle.answer == OracleAnswer::perfect);
    else if (oracle.certificate.found() &&
             !is_odd_hole(oracle.certificate.hole().in_complement ? complement(g) : g,
                          oracle.certificate.hole().vertices))
      problem = "oracle certificate does not verify";
    else if (!verdict.perfect && !verify_witness(verdict.witness->ring, verdict.witness->elements))
      problem = "witness does not verify";
    if (opt.table)
      *opt.table << "  " << std::left << std::setw(34) << text << std::setw(13) << detail::verdict_word(claimed)
                 << (oracle.answer == OracleAnswer::unknown ? "unknown" : detail::verdict_word(oracle.answer == OracleAnswer::perfect))
                 << (problem.empty() ? "" : "   <-- " + problem) << "\n";
    if (!problem.empty())
      return {1, "classifier-oracle agreement", false, text + ": " + problem, detail::seconds_since(t0)};
    perfect += claimed ? 1 : 0;
  }
  return {1, "classifier-oracle agreement", true,
          std::to_string(cases) + " rings, " + std::to_string(perfect) + " perfect", detail::seconds_since(t0)};
}

// 2. G_{M_2(GF(2))} has no odd hole in itself or its complement.
inline auto check_m2f2_no_odd_hole(const Options&) -> CriterionResult
{
  const auto t0 = Clock::now();
  const auto g = build_unitary_cayley(parse_ring_spec("M(2,GF(2))"));
  const auto co = complement(g);
  const auto a = find_odd_hole(g, exhaustive_bound(g));
  const auto b = find_odd_hole(co, exhaustive_bound(co));
  const auto secs = detail::seconds_since(t0);
  const bool ok = !a.found() && !b.found() && a.none().exhaustive && b.none().exhaustive && secs < 1.0;
  std::ostringstream d;
  d << "16 vertices; graph " << (a.found() ? "has" : "has no") << " odd hole, complement "
    << (b.found() ? "has" : "has no") << " odd hole; " << std::fixed << std::setprecision(4) << secs << " s";
  return {2, "M_2(GF(2)) exhaustive odd-hole search", ok, d.str(), secs};
}

// 3. Every explicit cycle family verifies on its listed rings.
inline auto check_explicit_witnesses(const Options&) -> CriterionResult
{
  const auto t0 = Clock::now();
  struct Case
  {
    std::string label;
    std::string ring;
    std::vector<RingElem> elems;
  };
  std::vector<Case> cases;
  cases.push_back({"explicit M_2(GF(3)) cycle", "M(2,GF(3))", as_ring_elements(m2f3_explicit_cycle())});
  for (auto q : {5, 7})
    cases.push_back({"char-odd template GF(" + std::to_string(q) + ")", "M(2,GF(" + std::to_string(q) + "))",
                     as_ring_elements(witness_matrix_char_odd(FieldSpec::of_order(q)))});
  for (auto q : {4, 8})
    cases.push_back({"char-2 template GF(" + std::to_string(q) + ")", "M(2,GF(" + std::to_string(q) + "))",
                     as_ring_elements(witness_matrix_char2(FieldSpec::of_order(q)))});
  for (auto d : {3, 4, 5})
    cases.push_back({"d>=3 construction d=" + std::to_string(d), "M(" + std::to_string(d) + ",GF(2))",
                     as_ring_elements(witness_matrix_f2_large(d))});
  const auto f3 = FieldSpec::of_order(3);
  cases.push_back({"three fields (3,3,3)", "GF(3) x GF(3) x GF(3)", witness_three_fields(f3, f3, f3)});
  cases.push_back({"M_2(GF(2)) x GF(3)", "M(2,GF(2)) x GF(3)", witness_m2f2_times_field(f3)});
  cases.push_back({"M_2(GF(2))^2", "M(2,GF(2)) x M(2,GF(2))", witness_m2f2_squared()});
  for (const auto& c : cases)
    if (!verify_witness(parse_ring_spec(c.ring), c.elems))
      return {3, "explicit witnesses reproduce", false, c.label + " fails", detail::seconds_since(t0)};
  return {3, "explicit witnesses reproduce", true, std::to_string(cases.size()) + " witnesses verified",
          detail::seconds_since(t0)};
}

// 4. Determinant identities over GF(2).
inline auto check_determinants(const Options&) -> CriterionResult
{
  const auto t0 = Clock::now();
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto want = n % 2 == 0 ? 1u : 0u;
    if (determinant(symmetric_jordan(n)).index() != want)
      return {4, "determinant identities", false, "det(B_n + B_n^T) wrong for n = " + std::to_string(n),
              detail::seconds_since(t0)};
  }
  for (std::size_t d = 3; d <= 12; ++d)
    if (determinant(corner_plus_symmetric_jordan(d)).index() != 1)
      return {4, "determinant identities", false, "det(A + B + B^T) != 1 for d = " + std::to_string(d),
              detail::seconds_since(t0)};
  return {4, "determinant identities", true, "n = 2..12 and d = 3..12", detail::seconds_since(t0)};
}

// 5. Every matrix in the listed rings is a sum of two units.
inline auto check_sum_of_two_units(const Options&) -> CriterionResult
{
  const auto t0 = Clock::now();
  std::size_t total = 0;
  for (const auto* text : {"M(2,GF(2))", "M(2,GF(3))", "M(3,GF(2))"}) {
    for (const auto& e : ring_enumerate(parse_ring_spec(text))) {
      const auto& m = std::get<Matrix>(e.component(0));
      const auto [u, v] = sum_of_two_units_witness(m);
      if (determinant(u).is_zero() || determinant(v).is_zero() || !(u + v == m))
        return {5, "sum of two units", false, std::string(text) + ": bad decomposition of " + render(m),
                detail::seconds_since(t0)};
      ++total;
    }
  }
  const auto secs = detail::seconds_since(t0);
  return {5, "sum of two units", secs < 10.0, std::to_string(total) + " matrices decomposed", secs};
}

// 6. G_{Z/n} is isomorphic to G_{(Z/n)^ss} wreath E_{|Rad|}.
inline auto check_wreath_reduction(const Options&) -> CriterionResult
{
  const auto t0 = Clock::now();
  for (std::uint32_t n : {4, 8, 9, 12, 16, 18, 25, 27}) {
    const auto spec = RingSpec({mod_int(n)});
    const auto ss = semisimplify(spec);
    const auto g = build_unitary_cayley(spec);
    const auto h = wreath_with_empty(build_unitary_cayley(to_ring_spec(ss)), ss.radical_size);
    const auto iso = find_isomorphism(g, h);
    if (!iso || !is_valid_isomorphism(g, h, *iso))
      return {6, "radical wreath reduction", false, "no isomorphism for Z(" + std::to_string(n) + ")",
              detail::seconds_since(t0)};
  }
  return {6, "radical wreath reduction", true, "8 isomorphisms found and checked", detail::seconds_since(t0)};
}

// 7. Matrix rings are not bipartite; a GF(2) or even Z/n factor forces bipartiteness.
inline auto check_bipartiteness(const Options& opt) -> CriterionResult
{
  const auto t0 = Clock::now();
  for (const auto* text : {"M(2,GF(2))", "M(2,GF(3))", "M(3,GF(2))"}) {
    const auto g = build_unitary_cayley(parse_ring_spec(text));
    const auto b = is_bipartite(g);
    if (b.bipartite || b.odd_walk.size() % 2 == 0 || !is_closed_walk(g, b.odd_walk))
      return {7, "bipartiteness", false, std::string(text) + " should be non-bipartite with an odd closed walk",
              detail::seconds_since(t0)};
  }
  std::vector<std::string> even;
  for (const auto& s : agreement_corpus(std::min<std::uint64_t>(opt.max_ring_size, 300))) {
    const auto fields = semisimplify(parse_ring_spec(s)).field_orders;
    if (std::find(fields.begin(), fields.end(), 2u) != fields.end())
      even.push_back(s);
  }
  for (std::uint32_t n = 2; n <= 32; n += 2)
    even.push_back("Z(" + std::to_string(n) + ")");
  for (const auto* s : {"Z(6) x GF(3)", "M(2,GF(3)) x Z(4)", "GF(9) x Z(10)", "M(2,GF(2)) x Z(2)"})
    even.emplace_back(s);
  std::size_t checked = 0;
  for (const auto& s : even) {
    const auto spec = parse_ring_spec(s);
    if (spec.size() > opt.max_ring_size)
      continue;
    const auto g = build_unitary_cayley(spec, opt.max_ring_size);
    const auto b = is_bipartite(g);
    bool proper = b.bipartite;
    for (const auto& [u, v] : g.edges())
      proper = proper && b.colouring[u] != b.colouring[v];
    if (!proper)
      return {7, "bipartiteness", false, s + " should be bipartite", detail::seconds_since(t0)};
    ++checked;
  }
  return {7, "bipartiteness", true, "3 non-bipartite matrix rings, " + std::to_string(checked) + " bipartite rings",
          detail::seconds_since(t0)};
}

// 8. Witnesses verify on rings too large for the oracle.
inline auto check_large_witnesses(const Options& opt) -> CriterionResult
{
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const auto* text :
       {"M(2,GF(2)) x M(2,GF(2))", "M(3,GF(2))", "M(2,GF(2)) x M(2,GF(2)) x GF(3)", "M(2,GF(7))", "M(2,GF(8))",
        "GF(9) x GF(9) x GF(9)", "M(2,GF(2)) x GF(5) x GF(7)", "M(2,GF(3)) x GF(3) x GF(5)", "M(3,GF(3))",
        "M(4,GF(2))", "Z(27) x Z(25) x Z(7)", "M(2,GF(4)) x Z(9)", "M(2,GF(2)) x M(2,GF(2)) x M(2,GF(2))"}) {
    const auto spec = parse_ring_spec(text);
    const auto v = classify(spec);
    if (v.perfect || !v.witness || !verify_witness(v.witness->ring, v.witness->elements))
      return {8, "witness soundness beyond oracle range", false, std::string(text) + " has no valid witness",
              detail::seconds_since(t0)};
    // Within the element cap, the witness must also be an induced cycle of the built graph.
    if (v.witness->ring.size() <= opt.max_ring_size) {
      const auto g = build_unitary_cayley(v.witness->ring, opt.max_ring_size);
      const ElementCoder coder(v.witness->ring, opt.max_ring_size);
      std::vector<std::size_t> idx;
      for (const auto& e : v.witness->elements)
        idx.push_back(static_cast<std::size_t>(coder.encode(e)));
      if (!is_odd_hole(g, idx))
        return {8, "witness soundness beyond oracle range", false, std::string(text) + ": witness not a hole of G",
                detail::seconds_since(t0)};
    }
    ++checked;
  }
  return {8, "witness soundness beyond oracle range", true, std::to_string(checked) + " rings",
          detail::seconds_since(t0)};
}

// 9. Randomised lifting: induced cycle x closed walks -> induced cycle.
inline auto check_lifting(const Options& opt) -> CriterionResult
{
  const auto t0 = Clock::now();
  std::mt19937_64 rng(opt.seed);

  std::vector<CycleBlock> anchors;
  anchors.push_back({parse_ring_spec("M(2,GF(3))"), as_ring_elements(witness_matrix_char_odd(FieldSpec::of_order(3)))});
  anchors.push_back({parse_ring_spec("M(2,GF(4))"), as_ring_elements(witness_matrix_char2(FieldSpec::of_order(4)))});
  anchors.push_back({parse_ring_spec("M(3,GF(2))"), as_ring_elements(witness_matrix_f2_large(3))});
  {
    const auto f3 = FieldSpec::of_order(3), f4 = FieldSpec::of_order(4), f5 = FieldSpec::of_order(5);
    anchors.push_back({parse_ring_spec("GF(3) x GF(4) x GF(5)"), witness_three_fields(f3, f4, f5)});
    anchors.push_back({parse_ring_spec("M(2,GF(2)) x GF(3)"), witness_m2f2_times_field(f3)});
  }
  anchors.push_back({parse_ring_spec("M(2,GF(2)) x M(2,GF(2))"), witness_m2f2_squared()});
  {
    // A searched (not templated) cycle as well.
    const auto g = build_unitary_cayley(parse_ring_spec("GF(3) x GF(3) x GF(3)"));
    const auto c = find_induced_cycle(g, 5);
    std::vector<RingElem> seq;
    for (auto v : *c)
      seq.push_back(g.labels()[v]);
    anchors.push_back({parse_ring_spec("GF(3) x GF(3) x GF(3)"), std::move(seq)});
  }

  const std::vector<std::string> walk_rings{"GF(3)", "GF(4)", "GF(5)", "GF(7)", "M(2,GF(2))", "M(2,GF(3))",
                                            "GF(3) x GF(4)"};
  std::vector<Graph> walk_graphs;
  for (const auto& r : walk_rings)
    walk_graphs.push_back(build_unitary_cayley(parse_ring_spec(r)));

  constexpr int instances = 200;
  for (int i = 0; i < instances; ++i) {
    auto anchor = anchors[std::uniform_int_distribution<std::size_t>(0, anchors.size() - 1)(rng)];
    // Rotate and possibly reverse: still the same induced cycle.
    std::rotate(anchor.sequence.begin(),
                anchor.sequence.begin() + static_cast<std::ptrdiff_t>(std::uniform_int_distribution<int>(0, 4)(rng)),
                anchor.sequence.end());
    if (rng() & 1)
      std::reverse(anchor.sequence.begin(), anchor.sequence.end());
    const auto extra = std::uniform_int_distribution<int>(0, 3)(rng);
    std::vector<CycleBlock> blocks;
    for (int e = 0; e < extra; ++e) {
      const auto w = std::uniform_int_distribution<std::size_t>(0, walk_rings.size() - 1)(rng);
      std::vector<RingElem> seq;
      for (auto v : detail::random_closed_walk(walk_graphs[w], 5, rng))
        seq.push_back(walk_graphs[w].labels()[v]);
      blocks.push_back({parse_ring_spec(walk_rings[w]), std::move(seq)});
    }
    const auto anchor_pos = std::uniform_int_distribution<std::size_t>(0, blocks.size())(rng);
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(anchor_pos), anchor);
    const auto lifted = lift_cycle(blocks, anchor_pos);
    if (!verify_witness(lifted.ring, lifted.elements))
      return {9, "lifting property", false, "instance " + std::to_string(i) + " over " + render(lifted.ring),
              detail::seconds_since(t0)};
  }
  return {9, "lifting property", true, std::to_string(instances) + " random instances", detail::seconds_since(t0)};
}

inline auto run_all(const Options& opt) -> std::vector<CriterionResult>
{
  using Check = CriterionResult (*)(const Options&);
  const Check checks[] = {check_agreement,        check_m2f2_no_odd_hole,  check_explicit_witnesses,
                          check_determinants,     check_sum_of_two_units,  check_wreath_reduction,
                          check_bipartiteness,    check_large_witnesses,   check_lifting};
  std::vector<CriterionResult> out;
  int id = 0;
  for (auto check : checks) {
    ++id;
    try {
      out.push_back(check(opt));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0.0});
    }
  }
  return out;
}

inline auto format_result(const CriterionResult& r) -> std::string
{
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " -- " << r.detail << " (" << std::fixed
     << std::setprecision(2) << r.seconds << " s)";
  return os.str();
}

} // namespace ucg::selftest
