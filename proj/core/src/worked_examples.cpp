#include <random>

#include "frobgen/generators.hpp"

namespace frobgen {

const std::vector<std::string>& c8f5_printed_factors() {
  static const std::vector<std::string> factors{
      "y^8 + (3*s^3 + 4*s^2*t + 4*s*t^2 + 2*t^3)*y^4 + s^6 + s^5*t + 4*s^4*t^2 + 4*s^3*t^3 + 4*s^2*t^4 + 3*s*t^5 + "
      "3*t^6",
      "y^8 + (3*s^3 + s^2*t + 4*s*t^2 + 3*t^3)*y^4 + s^6 + 4*s^5*t + 4*s^4*t^2 + s^3*t^3 + 4*s^2*t^4 + 2*s*t^5 + "
      "3*t^6",
      "y^8 + (4*s^3 + 2*s*t^2)*y^4 + s^2*t^4 + 3*t^6",
  };
  return factors;
}

const std::string& c8f5_printed_polynomial() {
  static const std::string f =
      "Y^25 + (4*s^15 + 4*s^11*t^4 + 3*s^9*t^6 + 3*s^7*t^8 + 2*s^5*t^10 + 3*s^3*t^12 + 4*s*t^14)*Y^5 + "
      "(s^14*t^4 + 2*s^10*t^8 + 4*s^8*t^10 + 4*s^6*t^12 + 3*s^4*t^14 + 4*s^2*t^16 + 2*t^18)*Y";
  return f;
}

bool verify_factorization(const SymLinPoly& f, const std::vector<std::string>& factors) {
  const sym::Ring& ring = f.coeffs().back().ring();
  std::vector<std::string> vars = ring.vars();
  vars.push_back("y");
  const sym::Ring big(ring.p(), vars);
  const sym::RatFunc y = sym::RatFunc::variable(big, "y");

  sym::RatFunc lhs(big);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    lhs += sym::extend_ring(f.coeffs()[i], big) * y.pow(f.exponent_of(i));
  }
  if (f.affine_part()) lhs += sym::extend_ring(*f.affine_part(), big);

  sym::RatFunc rhs = y;
  for (const auto& text : factors) rhs *= sym::parse_expr(text, big);
  return lhs == rhs && sym::equal_by_cross_multiplication(lhs, rhs);
}

bool verify_c8f5_factorization() {
  const Cyclic2Result res = cyclic2_generic_poly(5, 3);
  return verify_factorization(*res.f, c8f5_printed_factors());
}

const std::vector<std::string>& q8_printed_triple() {
  static const std::vector<std::string> triple{
      "t_1^2 - t_1",
      "t_2^2 - t_2",
      "t_3^2 - t_3 - t_1^3 - t_2*t_1^2 - t_2^3",
  };
  return triple;
}

const std::string& q8_printed_polynomial_text() {
  static const std::string f =
      "a^8 + a^5*b + a^4*b^2 + a^3*b^3 + a^4*b^4 + a*b^5 + b^8 + a^2*b*c + a*b^2*c + a^2*c^2 + a*b*c^2 + b^2*c^2 + "
      "c^4 + (a^2*b + a*b^2)*Y + (a^2 + a*b + a^2*b + b^2 + a*b^2)*Y^2 + (1 + a^2 + a*b + b^2)*Y^4 + Y^8";
  return f;
}

SymLinPoly q8_printed_polynomial() {
  const sym::Ring ring(2, {"a", "b", "c"});
  return parse_linearized(q8_printed_polynomial_text(), ring, FrobeniusQ{1});
}

const std::string& q8_eliminant_polynomial_text() {
  static const std::string f = [] {
    std::string text = q8_printed_polynomial_text();
    text.replace(text.find("a^4*b^2"), 7, "a^2*b^4");
    return text;
  }();
  return f;
}

SymLinPoly q8_eliminant_polynomial() {
  const sym::Ring ring(2, {"a", "b", "c"});
  return parse_linearized(q8_eliminant_polynomial_text(), ring, FrobeniusQ{1});
}

bool Q8Report::eliminant_agrees_everywhere() const {
  if (points.empty()) return false;
  for (const auto& pt : points) {
    if (!pt.eliminant_agrees()) return false;
  }
  return true;
}

bool Q8Report::all_points_agree() const {
  if (points.empty()) return false;
  for (const auto& pt : points) {
    if (!pt.agrees()) return false;
  }
  return true;
}

namespace {

bool q8_valid(const std::vector<gf::FieldElement>& abc) {
  const auto& a = abc[0];
  const auto& b = abc[1];
  return !(a * b * (a + b)).is_zero();
}

unsigned degree_or_zero(const FiniteLinPoly& f) {
  try {
    return splitting_degree(f, 3, 16);
  } catch (const BudgetExceeded&) {
    return 0;
  }
}

Q8Point q8_point(const GroupParam& q8, const SymLinPoly& printed, const SymLinPoly& eliminant,
                 const std::vector<gf::FieldElement>& abc) {
  const gf::FieldSpec& F = abc[0].field();
  Q8Point pt;
  pt.abc = abc;
  pt.r = F.k();
  const FiniteMatrix a = q8.at(abc);
  const auto module = FrobModule<gf::FieldElement>::make(a, FrobeniusQ{1});
  pt.system_degree = module_splitting_degree(module, 8);

  const sym::Assignment xi{{"a", abc[0]}, {"b", abc[1]}, {"c", abc[2]}};
  pt.polynomial_degree = degree_or_zero(specialize(printed, xi, F));
  pt.eliminant_degree = degree_or_zero(specialize(eliminant, xi, F));

  const gf::FieldSpec E = extension_of(F, pt.system_degree);
  const auto emb = gf::embed_field(F, E);
  const FiniteMatrix ae = a.map([&](const gf::FieldElement& x) { return emb.map(x); });
  const auto fiber = solve_fiber_linear(ae, q8, E, FrobeniusQ{1});
  pt.fiber_size = fiber.size();
  const gf::FieldSpec F2 = gf::default_field(2, 1);
  pt.rho_in_q8 = !fiber.empty();
  pt.rho_order_matches = !fiber.empty();
  for (const auto& u : fiber) {
    const FiniteMatrix rho = inverse(u) * frob_twist(u, FrobeniusQ{F.k()});
    bool rational = true;
    for (std::size_t i = 0; i < rho.rows(); ++i) {
      for (std::size_t j = 0; j < rho.cols(); ++j) rational = rational && rho(i, j).in_prime_field();
    }
    if (!rational) {
      pt.rho_in_q8 = false;
      continue;
    }
    const FiniteMatrix rho2 = rho.map([&](const gf::FieldElement& x) { return F2.from_int(x.prime_value()); });
    if (!q8.is_member(rho2)) pt.rho_in_q8 = false;
    if (matrix_order(rho2, 64) != pt.system_degree) pt.rho_order_matches = false;
  }
  return pt;
}

}  // namespace

Q8Report q8_reproduction(std::uint64_t seed, unsigned samples) {
  const GroupParam q8 = q8_param();
  std::vector<sym::RatFunc> computed = lambda_star_generators(q8, FrobeniusQ{1});
  std::vector<sym::RatFunc> printed;
  for (const auto& text : q8_printed_triple()) printed.push_back(sym::parse_expr(text, q8.ring()));
  const bool match = computed == printed;
  Q8Report report{std::move(computed), std::move(printed), match, q8_printed_polynomial(), q8_eliminant_polynomial(),
                  {}, 0};
  auto visit = [&](const std::vector<gf::FieldElement>& abc) {
    if (!q8_valid(abc)) {
      ++report.skipped_invalid;
      return false;
    }
    report.points.push_back(q8_point(q8, report.printed_polynomial, report.eliminant_polynomial, abc));
    return true;
  };

  for (unsigned r : {2U, 3U}) {
    const auto elems = gf::enumerate(gf::default_field(2, r));
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        for (const auto& c : elems) visit({a, b, c});
      }
    }
  }
  std::mt19937_64 rng(seed);
  const gf::FieldSpec F16 = gf::default_field(2, 4);
  for (unsigned taken = 0; taken < samples;) {
    std::vector<gf::FieldElement> abc;
    for (int i = 0; i < 3; ++i) abc.push_back(gf::random_like(F16.zero(), rng));
    if (visit(abc)) ++taken;
  }
  return report;
}

}  // namespace frobgen
