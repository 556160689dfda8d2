#include <cctype>
#include <optional>

#include "frobgen/error.hpp"
#include "frobgen/fp_poly.hpp"
#include "frobgen/symfield.hpp"

namespace frobgen::sym {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const Ring& ring) : text_(text), ring_(ring) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFunc expr() {
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    RatFunc acc = term();
    if (negate) acc = -acc;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      RatFunc rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      const char c = peek();
      if (c != '*' && c != '/') break;
      const std::size_t at = pos_;
      ++pos_;
      RatFunc rhs = factor();
      if (c == '*') {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) throw ParseError("division by the zero polynomial", at);
        acc = acc / rhs;
      }
    }
    return acc;
  }

  RatFunc factor() {
    RatFunc b = base();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      std::uint64_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (e > UINT32_MAX) throw ParseError("exponent too large", start);
        ++pos_;
      }
      if (pos_ == start) fail("expected unsigned exponent after '^'");
      b = b.pow(e);
    }
    return b;
  }

  RatFunc base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % ring_.p();
        ++pos_;
      }
      return RatFunc::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                     std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = text_.substr(start, pos_ - start);
      if (!ring_.index_of(name)) throw ParseError("unknown variable '" + name + "'", start);
      return RatFunc::variable(ring_, name);
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(const std::string& text, const Ring& ring) { return ExprParser(text, ring).parse(); }

Assignment parse_assignment(const std::string& text, const gf::FieldSpec& target) {
  const Ring g_ring(target.p(), {"g"});
  Assignment out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value", start);
    std::string name = item.substr(0, eq);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
    if (name.empty()) throw ParseError("empty variable name", start);
    if (out.count(name) != 0) throw ParseError("variable '" + name + "' assigned twice", start);
    std::optional<RatFunc> value;
    try {
      value = parse_expr(item.substr(eq + 1), g_ring);
    } catch (const ParseError& e) {
      throw ParseError("bad value for '" + name + "'", start + eq + 1 + e.position());
    }
    out.emplace(name, specialize(*value, {{"g", target.generator_root()}}, target));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace frobgen::sym
