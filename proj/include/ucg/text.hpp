#pragma once

/**
 * Text forms of ring specs and ring elements.
 *
 * Spec grammar (whitespace-insensitive):
 *   spec  := atom ('x' atom)*
 *   atom  := 'GF(' q ')' | 'M(' d ',' 'GF(' q ')' ')' | 'Z(' n ')'
 *
 * Element rendering:
 *   prime-field element   2
 *   extension element     {c0,c1,...}      coefficients, lowest degree first
 *   residue               7
 *   matrix                [[a,b],[c,d]]
 *   product element       (x1, x2, ...)    a single-factor ring omits the parentheses
 */

#include "error.hpp"
#include "finfield.hpp"
#include "ring.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ucg {

inline auto render(const FieldElem& e) -> std::string
{
  if (e.field().degree() == 1)
    return std::to_string(e.index());
  std::string s = "{";
  const auto c = e.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0)
      s += ',';
    s += std::to_string(c[i]);
  }
  return s + "}";
}

inline auto render(const Matrix& m) -> std::string
{
  std::string s = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i > 0)
      s += ',';
    s += '[';
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0)
        s += ',';
      s += render(m.at(i, j));
    }
    s += ']';
  }
  return s + "]";
}

inline auto render(const Residue& r) -> std::string { return std::to_string(r.value); }

inline auto render(const Component& c) -> std::string
{
  return std::visit([](const auto& x) { return render(x); }, c);
}

inline auto render(const RingElem& e) -> std::string
{
  if (e.size() == 1)
    return render(e.component(0));
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0)
      s += ", ";
    s += render(e.component(i));
  }
  return s + ")";
}

inline auto render(const Atom& a) -> std::string
{
  return std::visit(
    [](const auto& x) -> std::string {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, FieldAtom>)
        return "GF(" + std::to_string(x.field.order()) + ")";
      else if constexpr (std::is_same_v<T, MatrixAtom>)
        return "M(" + std::to_string(x.dim) + ",GF(" + std::to_string(x.field.order()) + "))";
      else
        return "Z(" + std::to_string(x.modulus) + ")";
    },
    a);
}

inline auto render(const RingSpec& spec) -> std::string
{
  if (spec.is_zero_ring())
    return "0";
  std::string s;
  for (std::size_t i = 0; i < spec.factors().size(); ++i) {
    if (i > 0)
      s += " x ";
    s += render(spec.factors()[i]);
  }
  return s;
}

inline auto render(const SemisimpleForm& ss) -> std::string
{
  return render(to_ring_spec(ss));
}

namespace detail {

/// Cursor over the input with whitespace skipped; positions refer to the original text.
class Scanner
{
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  auto skip_ws() -> void
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  auto at_end() -> bool
  {
    skip_ws();
    return pos_ >= text_.size();
  }

  auto peek() -> char
  {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  auto position() const -> std::size_t { return pos_; }

  auto accept(char c) -> bool
  {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  auto expect(char c) -> void
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  auto expect_word(std::string_view w) -> void
  {
    for (char c : w)
      expect(c);
  }

  auto integer() -> std::int64_t
  {
    skip_ws();
    const auto start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::int64_t v = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::int64_t{1} << 40))
        throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      pos_ = start;
      fail("expected an integer");
    }
    return negative ? -v : v;
  }

  [[noreturn]] auto fail(const std::string& what) const -> void { throw ParseError(what, pos_); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline auto parse_field_order(Scanner& s) -> FieldSpec
{
  s.expect_word("GF(");
  const auto at = s.position();
  const auto q = s.integer();
  s.expect(')');
  if (q < 2)
    throw ParseError("GF(q) needs q >= 2", at);
  try {
    return FieldSpec::of_order(static_cast<std::uint64_t>(q));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), at);
  }
}

inline auto parse_atom(Scanner& s) -> Atom
{
  const auto c = s.peek();
  if (c == 'G')
    return FieldAtom{parse_field_order(s)};
  if (c == 'M') {
    s.expect_word("M(");
    const auto at = s.position();
    const auto d = s.integer();
    if (d < 2)
      throw ParseError("M(d, ...) needs d >= 2", at);
    s.expect(',');
    auto f = parse_field_order(s);
    s.expect(')');
    return MatrixAtom{static_cast<std::uint32_t>(d), std::move(f)};
  }
  if (c == 'Z') {
    s.expect_word("Z(");
    const auto at = s.position();
    const auto n = s.integer();
    s.expect(')');
    if (n < 2 || n > (std::int64_t{1} << 31))
      throw ParseError("Z(n) needs 2 <= n < 2^31", at);
    return ModIntAtom{static_cast<std::uint32_t>(n)};
  }
  s.fail("expected GF(q), M(d,GF(q)) or Z(n)");
}

inline auto parse_field_value(Scanner& s, const FieldSpec& f) -> std::uint32_t
{
  if (s.accept('{')) {
    std::vector<std::int64_t> coeffs;
    do
      coeffs.push_back(s.integer());
    while (s.accept(','));
    s.expect('}');
    if (coeffs.size() > f.degree())
      throw ShapeMismatch("coefficient vector longer than the field degree");
    return f.index_of_poly(coeffs);
  }
  if (s.peek() == '[' || s.peek() == '(')
    throw ShapeMismatch("expected a field element");
  return f.index_of_integer(s.integer());
}

inline auto parse_component(Scanner& s, const Atom& atom) -> Component
{
  if (const auto* fa = std::get_if<FieldAtom>(&atom))
    return FieldElem(fa->field, parse_field_value(s, fa->field));
  if (const auto* ma = std::get_if<MatrixAtom>(&atom)) {
    if (s.peek() != '[')
      throw ShapeMismatch("expected a " + std::to_string(ma->dim) + "x" + std::to_string(ma->dim) + " matrix");
    s.expect('[');
    std::vector<std::uint32_t> entries;
    std::size_t rows = 0;
    do {
      if (s.peek() != '[')
        throw ShapeMismatch("expected a matrix row");
      s.expect('[');
      std::size_t cols = 0;
      do {
        entries.push_back(parse_field_value(s, ma->field));
        ++cols;
      } while (s.accept(','));
      s.expect(']');
      if (cols != ma->dim)
        throw ShapeMismatch("matrix row has " + std::to_string(cols) + " entries, expected " +
                            std::to_string(ma->dim));
      ++rows;
    } while (s.accept(','));
    s.expect(']');
    if (rows != ma->dim)
      throw ShapeMismatch("matrix has " + std::to_string(rows) + " rows, expected " + std::to_string(ma->dim));
    return Matrix(ma->field, ma->dim, std::move(entries));
  }
  const auto n = std::get<ModIntAtom>(atom).modulus;
  if (s.peek() == '[' || s.peek() == '{' || s.peek() == '(')
    throw ShapeMismatch("expected a residue");
  const auto v = s.integer();
  return Residue{n, static_cast<std::uint32_t>(((v % n) + n) % n)};
}

} // namespace detail

/// Parses `atom (x atom)*`; errors carry the offending position.
inline auto parse_ring_spec(std::string_view text) -> RingSpec
{
  detail::Scanner s(text);
  std::vector<Atom> atoms;
  atoms.push_back(detail::parse_atom(s));
  while (!s.at_end()) {
    if (!s.accept('x'))
      s.fail("expected 'x' between factors");
    atoms.push_back(detail::parse_atom(s));
  }
  return RingSpec(std::move(atoms));
}

/// Parses an element in the stable rendering, guided by the spec's shapes.
inline auto parse_ring_elem(std::string_view text, const RingSpec& spec) -> RingElem
{
  detail::Scanner s(text);
  const auto& atoms = spec.factors();
  std::vector<Component> comps;
  if (atoms.size() == 1 && s.peek() != '(') {
    comps.push_back(detail::parse_component(s, atoms[0]));
  } else {
    if (s.peek() != '(')
      throw ShapeMismatch("expected a " + std::to_string(atoms.size()) + "-tuple");
    s.expect('(');
    if (!atoms.empty()) {
      do {
        if (comps.size() == atoms.size())
          throw ShapeMismatch("too many components for ring " + render(spec));
        comps.push_back(detail::parse_component(s, atoms[comps.size()]));
      } while (s.accept(','));
    }
    s.expect(')');
    if (comps.size() != atoms.size())
      throw ShapeMismatch("expected " + std::to_string(atoms.size()) + " components, got " +
                          std::to_string(comps.size()));
  }
  if (!s.at_end())
    s.fail("trailing characters after element");
  return RingElem(std::move(comps));
}

/// One element per non-empty line; '#' starts a comment.
inline auto parse_element_list(std::string_view text, const RingSpec& spec) -> std::vector<RingElem>
{
  std::vector<RingElem> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    out.push_back(parse_ring_elem(line, spec));
  }
  return out;
}

} // namespace ucg
