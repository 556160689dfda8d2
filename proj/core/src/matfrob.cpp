#include "frobgen/matfrob.hpp"

#include <cctype>

namespace frobgen {

SymMatrix parse_matrix(const std::string& text, const sym::Ring& ring) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "' in matrix", pos);
    ++pos;
  };

  std::vector<std::vector<sym::RatFunc>> rows;
  expect('[');
  while (true) {
    expect('[');
    std::vector<sym::RatFunc> row;
    while (true) {
      skip_ws();
      // An entry ends at the first ',' or ']' outside parentheses.
      const std::size_t start = pos;
      int depth = 0;
      while (pos < text.size()) {
        const char c = text[pos];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ']')) break;
        ++pos;
      }
      if (pos >= text.size()) throw ParseError("unterminated matrix row", pos);
      try {
        row.push_back(sym::parse_expr(text.substr(start, pos - start), ring));
      } catch (const ParseError& e) {
        throw ParseError("bad matrix entry", start + e.position());
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      ++pos;
      break;
    }
    rows.push_back(std::move(row));
    skip_ws();
    if (pos < text.size() && text[pos] == ';') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after matrix", pos);
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw ParseError("ragged matrix rows", 0);
  }
  return SymMatrix(rows);
}

FiniteMatrix specialize_matrix(const SymMatrix& a, const sym::Assignment& xi, const gf::FieldSpec& target) {
  return a.map([&](const sym::RatFunc& f) { return sym::specialize(f, xi, target); });
}

FiniteMatrix lift_matrix(const FiniteMatrix& a, const std::function<gf::FieldElement(const gf::FieldElement&)>& f) {
  return a.map(f);
}

}  // namespace frobgen
