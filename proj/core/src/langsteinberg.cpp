#include "frobgen/langsteinberg.hpp"

#include "frobgen/fp_linalg.hpp"
#include "frobgen/fp_poly.hpp"

namespace frobgen {

namespace {

namespace fp = gf::fp;

/// Odometer over L^d.
class CoordinateOdometer {
 public:
  CoordinateOdometer(const gf::FieldSpec& L, std::size_t d, std::uint64_t budget)
      : elems_(gf::enumerate(L, budget)), idx_(d, 0) {
    total_ = 1;
    for (std::size_t i = 0; i < d; ++i) {
      total_ *= elems_.size();
      if (total_ > budget) throw BudgetExceeded("enumeration of " + std::to_string(d) + " coordinates over " +
                                                L.literal() + " exceeds budget " + std::to_string(budget));
    }
  }

  std::uint64_t total() const { return total_; }

  std::vector<gf::FieldElement> current() const {
    std::vector<gf::FieldElement> u;
    u.reserve(idx_.size());
    for (auto i : idx_) u.push_back(elems_[i]);
    return u;
  }

  void advance() {
    for (auto& i : idx_) {
      if (++i < elems_.size()) return;
      i = 0;
    }
  }

 private:
  std::vector<gf::FieldElement> elems_;
  std::vector<std::size_t> idx_;
  std::uint64_t total_ = 0;
};

const gf::FieldSpec& field_of(const FiniteMatrix& a) { return a(0, 0).field(); }

}  // namespace

std::optional<LinearStructure> detect_linear_structure(const SymMatrix& m) {
  if (!m.square()) return std::nullopt;
  const sym::Ring& ring = m(0, 0).ring();
  const std::uint32_t p = ring.p();
  LinearStructure ls;
  ls.n = m.rows();
  ls.d = ring.nvars();
  ls.constant.assign(ls.n * ls.n, 0);
  ls.slope.assign(ls.d, std::vector<std::uint32_t>(ls.n * ls.n, 0));
  for (std::size_t r = 0; r < ls.n; ++r) {
    for (std::size_t c = 0; c < ls.n; ++c) {
      const sym::RatFunc& e = m(r, c);
      if (!e.is_polynomial() || e.num().total_degree() > 1) return std::nullopt;
      for (const auto& t : e.num().terms()) {
        std::size_t var = ls.d;
        for (std::size_t i = 0; i < ls.d; ++i) {
          if (t.exp[i] != 0) var = i;
        }
        if (var == ls.d) {
          ls.constant[r * ls.n + c] = t.coeff;
        } else {
          ls.slope[var][r * ls.n + c] = t.coeff;
        }
      }
    }
  }
  if (ls.d == 0) return ls;

  // Pivot positions scanned column by column.
  std::vector<std::vector<std::uint32_t>> chosen;
  for (std::size_t c = 0; c < ls.n && ls.pivots.size() < ls.d; ++c) {
    for (std::size_t r = 0; r < ls.n && ls.pivots.size() < ls.d; ++r) {
      const std::size_t pos = r * ls.n + c;
      std::vector<std::uint32_t> row(ls.d);
      for (std::size_t i = 0; i < ls.d; ++i) row[i] = ls.slope[i][pos];
      fp::DenseMatrix trial(chosen.size() + 1, ls.d);
      for (std::size_t a = 0; a < chosen.size(); ++a) {
        for (std::size_t b = 0; b < ls.d; ++b) trial.at(a, b) = chosen[a][b];
      }
      for (std::size_t b = 0; b < ls.d; ++b) trial.at(chosen.size(), b) = row[b];
      if (fp::rank(trial, p) == chosen.size() + 1) {
        chosen.push_back(row);
        ls.pivots.push_back(pos);
      }
    }
  }
  if (ls.pivots.size() < ls.d) return std::nullopt;

  fp::DenseMatrix aug(ls.d, 2 * ls.d);
  for (std::size_t a = 0; a < ls.d; ++a) {
    for (std::size_t b = 0; b < ls.d; ++b) aug.at(a, b) = chosen[a][b];
    aug.at(a, ls.d + a) = 1;
  }
  fp::row_reduce(aug, p);
  ls.pivot_inverse.assign(ls.d * ls.d, 0);
  for (std::size_t a = 0; a < ls.d; ++a) {
    for (std::size_t b = 0; b < ls.d; ++b) ls.pivot_inverse[a * ls.d + b] = aug.at(a, ls.d + b);
  }
  return ls;
}

GroupParam::GroupParam(std::string name, GroupKind kind, SymMatrix matrix, std::optional<sym::RatFunc> validity)
    : name_(std::move(name)), kind_(kind), matrix_(std::move(matrix)), validity_(std::move(validity)) {
  if (!matrix_.square()) throw InvalidArgument("group parametrization must be square");
  linear_ = detect_linear_structure(matrix_);
  if (kind_ != GroupKind::kSpecialLinear && !linear_) {
    throw InvalidArgument("family " + name_ + " is not linear in its parameters");
  }
}

const LinearStructure& GroupParam::require_linear() const {
  if (!linear_) throw InvalidArgument("no coordinate rule for family " + name_);
  return *linear_;
}

bool GroupParam::is_member(const FiniteMatrix& a) const {
  if (a.rows() != n() || a.cols() != n()) return false;
  if (a(0, 0).field().p() != p()) return false;
  const gf::FieldElement dt = det(a);
  if (kind_ == GroupKind::kSpecialLinear) return dt == dt.one_like();
  if (dt.is_zero()) return false;
  if (d() == 0) return a == at_assignment({}, field_of(a));
  return at(coordinates(a)) == a;
}

GroupParam q8_param() {
  const sym::Ring ring(2, {"t_1", "t_2", "t_3"});
  SymMatrix m = parse_matrix("[[1, t_1, t_2, t_3]; [0, 1, 0, t_1]; [0, 0, 1, t_1 + t_2]; [0, 0, 0, 1]]", ring);
  sym::RatFunc g = sym::parse_expr("t_1*t_2*(t_1 + t_2)", ring);
  return GroupParam("Q8", GroupKind::kUnipotent, std::move(m), std::move(g));
}

GroupParam torus_param(const TorusSpec& spec) {
  return GroupParam("T(" + spec.field.literal() + ")", GroupKind::kTorus, spec.general_matrix);
}

GroupParam sln_param(std::uint32_t q, unsigned n) {
  if (!fp::is_prime(q)) throw InvalidArgument("sln_param supports prime q only, got " + std::to_string(q));
  if (n < 2) throw InvalidArgument("SL_n needs n >= 2");
  std::vector<std::string> vars{"s"};
  for (unsigned i = 1; i < n; ++i) vars.push_back("t_" + std::to_string(i));
  const sym::Ring ring(q, vars);
  const sym::RatFunc zero(ring);
  std::vector<std::vector<sym::RatFunc>> rows(n, std::vector<sym::RatFunc>(n, zero));
  const sym::RatFunc s = sym::RatFunc::variable(ring, "s");
  rows[0][n - 1] = sym::RatFunc::constant(ring, n % 2 == 1 ? 1 : -1) / s;
  rows[1][0] = s;
  for (unsigned i = 2; i < n; ++i) rows[i][i - 1] = sym::RatFunc::constant(ring, 1);
  for (unsigned i = 1; i < n; ++i) rows[i][n - 1] = -sym::RatFunc::variable(ring, "t_" + std::to_string(i));
  return GroupParam("SL" + std::to_string(n) + "(F_" + std::to_string(q) + ")", GroupKind::kSpecialLinear,
                    SymMatrix(rows));
}

SymMatrix symbolic_lambda(const GroupParam& param, FrobeniusQ q) {
  try {
    return lang_steinberg_image(param.matrix(), q);
  } catch (const SingularMatrix&) {
    throw SingularMatrix("parametrization " + param.name() + " is symbolically singular");
  }
}

std::vector<sym::RatFunc> lambda_star_generators(const GroupParam& param, FrobeniusQ q) {
  if (param.d() == 0) return {};
  if (!param.linear()) throw InvalidArgument("no coordinate rule for family " + param.name());
  const SymMatrix lam = symbolic_lambda(param, q);
  std::vector<sym::RatFunc> gens = param.coordinates(lam);
  if (param.at(gens) != lam) throw InternalError("lambda image is not a member of " + param.name());
  return gens;
}

std::vector<FiniteMatrix> group_points(const GroupParam& param, const gf::FieldSpec& L, std::uint64_t budget) {
  if (!param.linear()) throw InvalidArgument("cannot enumerate family " + param.name());
  CoordinateOdometer od(L, param.d(), budget);
  std::vector<FiniteMatrix> out;
  for (std::uint64_t i = 0; i < od.total(); ++i, od.advance()) {
    FiniteMatrix u = param.at(od.current());
    if (!det(u).is_zero()) out.push_back(std::move(u));
  }
  return out;
}

std::vector<FiniteMatrix> brute_force_fiber(const FiniteMatrix& a, const GroupParam& param, const gf::FieldSpec& L,
                                            FrobeniusQ q, std::uint64_t budget) {
  if (field_of(a) != L) throw DomainMismatch("target matrix must have entries in " + L.literal());
  if (!param.linear()) throw InvalidArgument("cannot enumerate family " + param.name());
  CoordinateOdometer od(L, param.d(), budget);
  std::vector<FiniteMatrix> out;
  for (std::uint64_t i = 0; i < od.total(); ++i, od.advance()) {
    FiniteMatrix u = param.at(od.current());
    // lambda(U) = A  <=>  U = A U^(q), for invertible U.
    if (u == a * frob_twist(u, q) && !det(u).is_zero()) out.push_back(std::move(u));
  }
  return out;
}

std::vector<FiniteMatrix> solve_fiber_linear(const FiniteMatrix& a, const GroupParam& param, const gf::FieldSpec& L,
                                             FrobeniusQ q, std::uint64_t budget) {
  if (field_of(a) != L) throw DomainMismatch("target matrix must have entries in " + L.literal());
  if (!param.linear()) throw InvalidArgument("no coordinate rule for family " + param.name());
  const std::size_t d = param.d();
  const unsigned K = L.k();
  const std::uint32_t p = L.p();

  auto residual = [&](const std::vector<gf::FieldElement>& u) {
    const auto image = param.coordinates(a * param.at(frob_twist(u, q)));
    std::vector<gf::FieldElement> r;
    for (std::size_t i = 0; i < d; ++i) r.push_back(u[i] - image[i]);
    return r;
  };
  auto flatten = [&](const std::vector<gf::FieldElement>& u, std::vector<std::uint32_t>& out) {
    out.clear();
    for (const auto& x : u) out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
  };

  const std::vector<gf::FieldElement> zero(d, L.zero());
  std::vector<std::uint32_t> r0;
  flatten(residual(zero), r0);
  fp::DenseMatrix lin(d * K, d * K);
  std::vector<std::uint32_t> col;
  for (std::size_t i = 0; i < d; ++i) {
    for (unsigned l = 0; l < K; ++l) {
      std::vector<gf::FieldElement> u = zero;
      std::vector<std::int64_t> c(K, 0);
      c[l] = 1;
      u[i] = L.from_coeffs(c);
      flatten(residual(u), col);
      for (std::size_t row = 0; row < d * K; ++row) lin.at(row, i * K + l) = fp::sub_mod(col[row], r0[row], p);
    }
  }
  std::vector<std::uint32_t> rhs(r0.size());
  for (std::size_t i = 0; i < r0.size(); ++i) rhs[i] = r0[i] == 0 ? 0 : p - r0[i];
  const auto particular = fp::solve(lin, rhs, p);
  if (!particular) return {};
  const auto kernel = fp::kernel_basis(lin, p);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    count *= p;
    if (count > budget) throw BudgetExceeded("fiber has more than " + std::to_string(budget) + " candidates");
  }

  auto unflatten = [&](const std::vector<std::uint32_t>& v) {
    std::vector<gf::FieldElement> u;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::int64_t> c(v.begin() + static_cast<std::ptrdiff_t>(i * K),
                                  v.begin() + static_cast<std::ptrdiff_t>((i + 1) * K));
      u.push_back(L.from_coeffs(c));
    }
    return u;
  };
  std::vector<FiniteMatrix> out;
  std::vector<std::uint32_t> digits(kernel.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> v = *particular;
    for (std::size_t b = 0; b < kernel.size(); ++b) {
      if (digits[b] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = fp::add_mod(v[j], fp::mul_mod(digits[b], kernel[b][j], p), p);
    }
    FiniteMatrix u = param.at(unflatten(v));
    if (!det(u).is_zero()) {
      if (u != a * frob_twist(u, q)) throw InternalError("linear fiber solve produced a non-solution");
      out.push_back(std::move(u));
    }
    for (auto& dg : digits) {
      if (++dg < p) break;
      dg = 0;
    }
  }
  return out;
}

std::map<std::string, std::vector<FiniteMatrix>> lambda_fibers(const GroupParam& param, const gf::FieldSpec& L,
                                                               FrobeniusQ q, std::uint64_t budget) {
  std::map<std::string, std::vector<FiniteMatrix>> out;
  for (auto& u : group_points(param, L, budget)) {
    const std::string key = lang_steinberg_image(u, q).to_string();
    out[key].push_back(std::move(u));
  }
  return out;
}

FiberSearch minimal_fiber(const FiniteMatrix& a, const GroupParam& param, FrobeniusQ q, unsigned m_max,
                          std::uint64_t budget) {
  const gf::FieldSpec& base = field_of(a);
  for (unsigned m = 1; m <= m_max; ++m) {
    const gf::FieldSpec L = extension_of(base, m);
    const auto emb = gf::embed_field(base, L);
    const FiniteMatrix al = a.map([&](const gf::FieldElement& x) { return emb.map(x); });
    auto fiber = brute_force_fiber(al, param, L, q, budget);
    if (!fiber.empty()) return FiberSearch{m, L, std::move(fiber)};
  }
  throw BudgetExceeded("no Lang-Steinberg preimage up to degree " + std::to_string(m_max));
}

EquivalenceWitness find_nonvanishing_equivalent(const FiniteMatrix& a, const GroupParam& param, FrobeniusQ q,
                                                std::uint64_t seed, unsigned budget) {
  if (!param.validity()) throw InvalidArgument("family " + param.name() + " has no validity polynomial");
  const gf::FieldSpec& L = field_of(a);
  const auto& vars = param.ring().vars();
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 1; attempt <= budget; ++attempt) {
    std::vector<gf::FieldElement> u;
    for (std::size_t i = 0; i < param.d(); ++i) u.push_back(gf::random_like(L.zero(), rng));
    FiniteMatrix y = param.at(u);
    if (det(y).is_zero()) continue;
    FiniteMatrix b = frobenius_conjugate(a, y, q);
    const auto coords = param.coordinates(b);
    sym::Assignment xi;
    for (std::size_t i = 0; i < vars.size(); ++i) xi.emplace(vars[i], coords[i]);
    if (!sym::specialize(*param.validity(), xi, L).is_zero()) {
      return EquivalenceWitness{std::move(y), std::move(b), attempt};
    }
  }
  throw BudgetExceeded("no equivalent matrix with nonvanishing validity polynomial in " + std::to_string(budget) +
                       " attempts");
}

}  // namespace frobgen
