#include <doctest.h>

#include <set>

#include "frobgen/error.hpp"
#include "frobgen/galois.hpp"
#include "frobgen/tori.hpp"
#include "support.hpp"

using namespace frobgen;
using frobgen::testing::kCases;
using frobgen::testing::kSeed;

TEST_CASE("weil_restriction examples") {
  const auto spec = weil_restriction(5, 2, std::vector<std::int64_t>{3, 0, 1});
  CHECK(spec.ring.vars() == default_torus_vars(2));
  CHECK(default_torus_vars(3) == std::vector<std::string>{"x_1", "x_2", "x_3"});
  CHECK(spec.general_matrix == parse_matrix("[[x_1, 2*x_2]; [x_2, x_1]]", spec.ring));
  // x^3 - x - 1 over F_3: g^3 = g + 1.
  const auto c = weil_restriction(3, 3, std::vector<std::int64_t>{2, 2, 0, 1}, std::vector<std::string>{"a", "b", "c"});
  CHECK(c.general_matrix == parse_matrix("[[a, c, b]; [b, a + c, b + c]; [c, b, a + c]]", c.ring));
  CHECK_THROWS_AS(weil_restriction(4, 2), InvalidArgument);
  CHECK_THROWS_AS(weil_restriction(5, 0), InvalidArgument);
  CHECK_THROWS_AS(weil_restriction(5, 2, std::nullopt, std::vector<std::string>{"a"}), InvalidArgument);
}

TEST_CASE("regular_rep is an injective homomorphism with det = norm, exhaustive up to 625 elements") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}, {3, 3}, {7, 2}, {11, 2}, {5, 3}, {5, 4}}) {
    const auto spec = weil_restriction(p, n);
    CAPTURE(spec.field.literal());
    const auto el = gf::enumerate(spec.field);
    std::set<std::string> images;
    std::size_t failures = 0;
    for (const auto& z : el) {
      const auto m = regular_rep(spec, z);
      images.insert(m.to_string());
      if (det(m) != gf::norm(z)) ++failures;
      if (torus_element(spec, m.column(0)) != z) ++failures;
      if (!z.is_zero() && !torus_member(spec, m)) ++failures;
    }
    CHECK(images.size() == el.size());
    CHECK(failures == 0);
  }
  std::mt19937_64 rng(kSeed);
  const auto spec = weil_restriction(7, 3);
  for (int i = 0; i < kCases; ++i) {
    const auto a = testing::any_element(spec.field, rng);
    const auto b = testing::any_element(spec.field, rng);
    CHECK(regular_rep(spec, a * b) == regular_rep(spec, a) * regular_rep(spec, b));
    CHECK(regular_rep(spec, a + b) == regular_rep(spec, a) + regular_rep(spec, b));
  }
}

TEST_CASE("general matrix specializes to the regular representation") {
  std::mt19937_64 rng(kSeed + 1);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{5, 2}, {2, 3}, {3, 4}}) {
    const auto spec = weil_restriction(p, n);
    const auto fp = gf::default_field(p, 1);
    const auto vars = spec.ring.vars();
    for (int i = 0; i < kCases / 3; ++i) {
      const auto z = testing::any_element(spec.field, rng);
      sym::Assignment xi;
      for (unsigned j = 0; j < n; ++j) xi.emplace(vars[j], fp.from_int(z.coeffs()[j]));
      CHECK(specialize_matrix(spec.general_matrix, xi, fp) == regular_rep(spec, z));
    }
  }
}

TEST_CASE("torus points commute") {
  std::mt19937_64 rng(kSeed + 2);
  const auto spec = weil_restriction(3, 2);
  const auto L = gf::default_field(3, 4);
  const auto pts = torus_points(spec, L);
  // T splits over F_81, so T(F_81) = (F_81^*)^2.
  CHECK(pts.size() == 80 * 80);
  for (int i = 0; i < kCases; ++i) {
    const auto& a = pts[rng() % pts.size()];
    const auto& b = pts[rng() % pts.size()];
    CHECK(a * b == b * a);
    CHECK(torus_member(spec, a * b));
    CHECK(torus_member(spec, inverse(a)));
  }
  const auto f9 = gf::default_field(3, 2);
  CHECK_FALSE(torus_member(spec, FiniteMatrix({{f9.one(), f9.one()}, {f9.zero(), f9.one()}})));
}

TEST_CASE("order and cyclicity of T(F_p)") {
  for (auto [p, n, order] : std::vector<std::tuple<std::uint32_t, unsigned, std::uint64_t>>{
           {5, 2, 24}, {3, 2, 8}, {2, 3, 7}, {7, 2, 48}, {3, 3, 26}}) {
    const auto info = order_and_cyclicity(weil_restriction(p, n));
    CHECK(info.order == order);
    CHECK(info.cyclic);
    REQUIRE(info.generator);
    CHECK(matrix_order(*info.generator) == order);
  }
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U}) {
    CHECK(order_and_cyclicity(weil_restriction(p, 1)).order == p - 1);
  }
}
