#include <doctest.h>

#include "frobgen/error.hpp"
#include "frobgen/symfield.hpp"
#include "support.hpp"

using namespace frobgen;
using frobgen::testing::kCases;
using frobgen::testing::kSeed;

namespace {

const sym::Ring& st5() {
  static const sym::Ring r(5, {"s", "t"});
  return r;
}

sym::RatFunc P(const std::string& text, const sym::Ring& ring = st5()) { return sym::parse_expr(text, ring); }

}  // namespace

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(sym::Ring(5, {"s", "s"}), InvalidArgument);
  CHECK_THROWS_AS(sym::Ring(5, {"S"}), InvalidArgument);
  CHECK_THROWS_AS(sym::Ring(5, {"1t"}), InvalidArgument);
  CHECK_THROWS_AS(sym::Ring(6, {"t"}), InvalidArgument);
  CHECK(sym::Ring(5, {"s", "t"}) == st5());
  CHECK(sym::Ring(5, {"t", "s"}) != st5());
  CHECK(sym::Ring(2, {"t_1", "t_2"}).index_of("t_2") == 1U);
}

TEST_CASE("parse examples") {
  const auto f = P("s^3+s*t^2");
  CHECK(f.is_polynomial());
  CHECK(f.num().terms().size() == 2);
  CHECK(f.to_string() == "s^3 + s*t^2");
  CHECK(P("(-1)") == sym::RatFunc::constant(st5(), 4));
  CHECK(P("-s + 7").to_string() == "4*s + 2");
  CHECK(P("s/t").to_string() == "s/t");
  CHECK(P("(s + 1)/(s^2 - 1)") == P("1/(s + 4)"));
  CHECK(P("2*s^2*t + 4*t^3 - (s^2*t + 4*t^3)") == P("s^2*t"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("1/(s-s)"), ParseError);
  CHECK_THROWS_AS(P("st"), ParseError);
  CHECK_THROWS_AS(P("s t"), ParseError);
  CHECK_THROWS_AS(P("2s"), ParseError);
  CHECK_THROWS_AS(P("s +"), ParseError);
  CHECK_THROWS_AS(P("s ** 2"), ParseError);
  CHECK_THROWS_AS(P("s^"), ParseError);
  CHECK_THROWS_AS(P("s^-1"), ParseError);
  CHECK_THROWS_AS(P("(s"), ParseError);
  CHECK_THROWS_AS(P("s)"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("s^99999999999"), ParseError);
  try {
    P("s + u");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("specialize examples") {
  const auto f5 = gf::default_field(5, 1);
  CHECK(sym::specialize(P("s^3+s*t^2"), {{"s", f5.one()}, {"t", f5.one()}}, f5).prime_value() == 2);
  CHECK_THROWS_AS(sym::specialize(P("1/s"), {{"s", f5.zero()}, {"t", f5.one()}}, f5), DenominatorVanishes);
  CHECK_THROWS_AS(sym::specialize(P("s + t"), {{"s", f5.one()}}, f5), InvalidArgument);
  const sym::Ring abc(2, {"a", "b", "c"});
  const auto f2 = gf::default_field(2, 1);
  const auto g = sym::specialize(P("a*b*(a+b)", abc), {{"a", f2.one()}, {"b", f2.one()}, {"c", f2.zero()}}, f2);
  CHECK(g.is_zero());
  // Specialization into an extension field.
  const auto f25 = gf::make_field(5, 2, std::vector<std::int64_t>{3, 0, 1});
  const auto alpha = f25.generator_root();
  CHECK(sym::specialize(P("s^2 + t"), {{"s", alpha}, {"t", f25.one()}}, f25) == f25.from_int(3));
}

TEST_CASE("parse_assignment") {
  const auto f25 = gf::default_field(5, 2);
  const auto xi = sym::parse_assignment("s=1, t=2*g+1", f25);
  REQUIRE(xi.size() == 2);
  CHECK(xi.at("s") == f25.one());
  CHECK(xi.at("t") == f25.from_coeffs({1, 2}));
  CHECK_THROWS_AS(sym::parse_assignment("s=1,s=2", f25), InvalidArgument);
  CHECK_THROWS_AS(sym::parse_assignment("s", f25), ParseError);
}

TEST_CASE("pow examples") {
  const auto t5 = P("t").pow(5);
  CHECK(t5.to_string() == "t^5");
  CHECK(t5.num().total_degree() == 5);
  CHECK(P("s/t").pow(2) == P("s^2/t^2"));
  for (int c = 0; c < 5; ++c) {
    const auto k = sym::RatFunc::constant(st5(), c);
    CHECK(k.pow(5) == k);
  }
  CHECK(P("s + t").frobenius_power(1) == P("s^5 + t^5"));
}

TEST_CASE("ring axioms on random rational functions") {
  std::mt19937_64 rng(kSeed);
  const std::vector<sym::Ring> rings{sym::Ring(5, {"s", "t"}), sym::Ring(2, {"a", "b", "c"}), sym::Ring(3, {"x"})};
  for (int i = 0; i < kCases; ++i) {
    const sym::Ring& ring = rings[i % rings.size()];
    const auto a = testing::any_ratfunc(ring, rng, 3);
    const auto b = testing::any_ratfunc(ring, rng, 3);
    const auto c = testing::any_ratfunc(ring, rng, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(sym::equal_by_cross_multiplication(a * (b + c), a * b + a * c));
    CHECK(a - a == a.zero_like());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == a.one_like());
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("canonical form is independent of construction order") {
  std::mt19937_64 rng(kSeed + 1);
  const sym::Ring ring(7, {"x", "y"});
  for (int i = 0; i < kCases; ++i) {
    const auto a = testing::any_polynomial(ring, rng, 3);
    const auto b = testing::any_polynomial(ring, rng, 3);
    const auto c = testing::any_polynomial(ring, rng, 2);
    if (c.is_zero() || b.is_zero()) continue;
    const auto lhs = (a + b) / c;
    const auto rhs = a / c + b / c;
    CHECK(lhs == rhs);
    CHECK((a * b) / b == a);
    CHECK((a * c) / (b * c) == a / b);
    CHECK(lhs.den().leading().coeff == 1);
  }
}

TEST_CASE("gcd oracle: a common factor always divides the gcd") {
  std::mt19937_64 rng(kSeed + 2);
  const sym::Ring ring(5, {"s", "t", "u"});
  for (int i = 0; i < kCases; ++i) {
    const auto f = sym::random_poly(ring, rng, 2, 3);
    const auto g = sym::random_poly(ring, rng, 2, 3);
    const auto h = sym::random_poly(ring, rng, 2, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    const auto d = sym::gcd(f * g, f * h);
    CHECK(sym::divide_exact(d, f).has_value());
    CHECK(sym::divide_exact(f * g, d).has_value());
    CHECK(sym::divide_exact(f * h, d).has_value());
    CHECK(d.leading().coeff == 1);
    // Maximality: the cofactors share nothing.
    CHECK(sym::gcd(*sym::divide_exact(f * g, d), *sym::divide_exact(f * h, d)).is_one());
  }
}

TEST_CASE("gcd of products with a planted common factor") {
  std::mt19937_64 rng(kSeed + 5);
  const sym::Ring ring(2, {"a", "b", "c"});
  for (int i = 0; i < kCases; ++i) {
    const auto f = sym::random_poly(ring, rng, 3, 4);
    const auto g = sym::random_poly(ring, rng, 3, 4);
    const auto h = sym::random_poly(ring, rng, 3, 4);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    const auto d = sym::gcd(f * g, f * h);
    CHECK(sym::divide_exact(d, f).has_value());
    CHECK(sym::gcd(*sym::divide_exact(f * g, d), *sym::divide_exact(f * h, d)).is_one());
    CHECK(sym::gcd(f * g, f * h) == sym::gcd(f * h, f * g));
  }
}

TEST_CASE("specialize is a ring homomorphism where defined") {
  std::mt19937_64 rng(kSeed + 3);
  const sym::Ring ring(3, {"a", "b"});
  const auto F = gf::default_field(3, 2);
  int defined = 0;
  for (int i = 0; i < 4 * kCases && defined < kCases; ++i) {
    const auto f = testing::any_ratfunc(ring, rng, 2);
    const auto g = testing::any_ratfunc(ring, rng, 2);
    const auto h = testing::any_ratfunc(ring, rng, 2);
    const sym::Assignment xi{{"a", testing::any_element(F, rng)}, {"b", testing::any_element(F, rng)}};
    try {
      const auto lhs = sym::specialize(f * g + h, xi, F);
      const auto rhs = sym::specialize(f, xi, F) * sym::specialize(g, xi, F) + sym::specialize(h, xi, F);
      CHECK(lhs == rhs);
      ++defined;
    } catch (const DenominatorVanishes&) {
    }
  }
  CHECK(defined >= 100);
}

TEST_CASE("parse-print-parse round trip") {
  std::mt19937_64 rng(kSeed + 4);
  const std::vector<sym::Ring> rings{sym::Ring(5, {"s", "t"}), sym::Ring(2, {"t_1", "t_2", "t_3"}),
                                     sym::Ring(11, {"x"})};
  for (int i = 0; i < kCases; ++i) {
    const sym::Ring& ring = rings[i % rings.size()];
    const auto f = testing::any_ratfunc(ring, rng, 4);
    const std::string text = f.to_string();
    CAPTURE(text);
    const auto g = sym::parse_expr(text, ring);
    CHECK(g == f);
    CHECK(g.to_string() == text);
  }
}

TEST_CASE("substitute and extend_ring") {
  const sym::Ring ring(5, {"s", "t"});
  const auto f = P("s^2 + t");
  CHECK(sym::substitute(f, {P("t"), P("s + 1")}) == P("t^2 + s + 1"));
  const sym::Ring big(5, {"s", "t", "y"});
  CHECK(sym::extend_ring(f, big) == sym::parse_expr("s^2 + t", big));
  CHECK(sym::characteristic(f) == 5);
}
