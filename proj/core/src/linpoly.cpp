#include "frobgen/linpoly.hpp"

#include "frobgen/fp_linalg.hpp"

namespace frobgen {

SymLinPoly parse_linearized(const std::string& text, const sym::Ring& ring, FrobeniusQ q, const std::string& var) {
  const std::string inner = "y_lin";
  if (ring.index_of(inner)) throw InvalidArgument("ring already uses the reserved name " + inner);
  std::string rewritten;
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, var.size(), var) == 0) {
      rewritten += inner;
      i += var.size();
    } else {
      rewritten += text[i++];
    }
  }
  std::vector<std::string> vars = ring.vars();
  vars.push_back(inner);
  const sym::Ring big(ring.p(), vars);
  const std::size_t y = vars.size() - 1;
  const sym::RatFunc f = sym::parse_expr(rewritten, big);
  if (f.den().degree_in(y) != 0) throw ParseError("variable " + var + " appears in a denominator", 0);

  // Drop the helper variable from a coefficient polynomial.
  auto shrink = [&](const sym::MPoly& g) {
    std::vector<sym::Term> terms;
    for (const auto& t : g.terms()) {
      sym::Exponents e(t.exp.begin(), t.exp.end() - 1);
      terms.push_back(sym::Term{std::move(e), t.coeff});
    }
    return sym::MPoly::from_terms(ring, std::move(terms));
  };
  const sym::MPoly den = shrink(f.den());
  const auto parts = sym::coefficients_in(f.num(), y);

  std::uint64_t qv = 1;
  for (unsigned i = 0; i < q.exponent; ++i) qv *= ring.p();
  std::vector<sym::RatFunc> coeffs;
  std::optional<sym::RatFunc> affine;
  std::uint64_t next = 1;
  for (std::size_t d = 0; d < parts.size(); ++d) {
    if (d == 0) {
      if (!parts[0].is_zero()) affine = sym::RatFunc(shrink(parts[0]), den);
      continue;
    }
    if (d != next) {
      if (!parts[d].is_zero()) throw ParseError("degree " + std::to_string(d) + " is not a power of q", 0);
      continue;
    }
    coeffs.push_back(sym::RatFunc(shrink(parts[d]), den));
    next *= qv;
  }
  if (coeffs.empty()) throw ParseError("no linearized terms", 0);
  return SymLinPoly(ring.p(), q, std::move(coeffs), std::move(affine));
}

gf::FieldElement eval(const FiniteLinPoly& f, const gf::FieldElement& y) {
  const gf::FieldSpec& field = f.coeffs().back().field();
  if (y.field() != field) throw DomainMismatch("evaluation point outside the coefficient field");
  gf::FieldElement acc = field.zero();
  gf::FieldElement power = y;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) power = power.frobenius_power(f.q().exponent);
    if (!f.coeffs()[i].is_zero()) acc += f.coeffs()[i] * power;
  }
  if (f.affine_part()) acc += *f.affine_part();
  return acc;
}

FiniteLinPoly embed(const FiniteLinPoly& f, const gf::FieldEmbedding& emb) {
  return f.map([&](const gf::FieldElement& c) { return emb.map(c); });
}

FiniteLinPoly specialize(const SymLinPoly& f, const sym::Assignment& xi, const gf::FieldSpec& target) {
  return f.map([&](const sym::RatFunc& c) { return sym::specialize(c, xi, target); });
}

gf::FieldSpec extension_of(const gf::FieldSpec& base, unsigned M) {
  if (M == 0) throw InvalidArgument("extension degree must be positive");
  return gf::default_field(base.p(), base.k() * M);
}

RootSpace root_space(const FiniteLinPoly& f, unsigned M) {
  const gf::FieldSpec& base = f.coeffs().back().field();
  if (base.k() % f.q().exponent != 0) throw DomainMismatch("F_q is not contained in the coefficient field");
  const gf::FieldSpec big = extension_of(base, M);
  const FiniteLinPoly g = embed(f, gf::embed_field(base, big));
  const std::uint32_t p = big.p();
  const unsigned K = big.k();

  // Matrix of the linear part y -> sum c_i y^{q^i} in the power basis.
  const FiniteLinPoly linear(g.p(), g.q(), g.coeffs());
  gf::fp::DenseMatrix m(K, K);
  for (unsigned j = 0; j < K; ++j) {
    std::vector<std::int64_t> e(K, 0);
    e[j] = 1;
    const gf::FieldElement img = eval(linear, big.from_coeffs(e));
    for (unsigned i = 0; i < K; ++i) m.at(i, j) = img.coeffs()[i];
  }
  RootSpace rs{big, {}, std::nullopt, true, f.q().exponent};
  for (const auto& v : gf::fp::kernel_basis(m, p)) {
    rs.kernel.push_back(big.from_coeffs(std::vector<std::int64_t>(v.begin(), v.end())));
  }
  if (g.affine_part()) {
    std::vector<std::uint32_t> rhs(K);
    const gf::FieldElement minus_c = -*g.affine_part();
    for (unsigned i = 0; i < K; ++i) rhs[i] = minus_c.coeffs()[i];
    if (auto x = gf::fp::solve(m, rhs, p)) {
      rs.particular = big.from_coeffs(std::vector<std::int64_t>(x->begin(), x->end()));
    } else {
      rs.solvable = false;
    }
  }
  return rs;
}

unsigned splitting_degree(const FiniteLinPoly& f, unsigned n_expected, unsigned m_max) {
  if (!f.separable()) throw InvalidArgument("splitting degree requires a separable polynomial");
  if (n_expected != f.q_degree()) throw InvalidArgument("expected dimension must equal the q-degree");
  const unsigned bound = std::min(m_max, kSplittingDegreeCeiling);
  for (unsigned M = 1; M <= bound; ++M) {
    const RootSpace rs = root_space(f, M);
    if (rs.fq_dimension() > n_expected) throw InternalError("root space larger than the q-degree");
    if (rs.solvable && rs.fq_dimension() == n_expected) return M;
  }
  throw BudgetExceeded("splitting degree exceeds bound " + std::to_string(bound));
}

}  // namespace frobgen
