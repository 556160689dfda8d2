#include "frobgen/tori.hpp"

#include "frobgen/galois.hpp"

namespace frobgen {

namespace {

std::vector<gf::FieldElement> coords_in(const std::vector<std::uint32_t>& c, const gf::FieldSpec& prime) {
  std::vector<gf::FieldElement> out;
  out.reserve(c.size());
  for (auto x : c) out.push_back(prime.from_int(x));
  return out;
}

}  // namespace

std::vector<std::string> default_torus_vars(unsigned n) {
  std::vector<std::string> v;
  for (unsigned i = 1; i <= n; ++i) v.push_back("x_" + std::to_string(i));
  return v;
}

TorusSpec weil_restriction(std::uint32_t p, unsigned n, const std::optional<std::vector<std::int64_t>>& modulus,
                           std::optional<std::vector<std::string>> vars) {
  if (n < 1) throw InvalidArgument("torus dimension must be at least 1");
  const gf::FieldSpec field = modulus ? gf::make_field(p, n, modulus) : gf::default_field(p, n);
  std::vector<std::string> names = vars ? *vars : default_torus_vars(n);
  if (names.size() != n) throw InvalidArgument("torus needs exactly n variable names");
  const sym::Ring ring(p, names);

  // Entry (r, j) = sum_i x_i * coord_r(g^{i+j}).
  const gf::FieldElement g = field.generator_root();
  std::vector<gf::FieldElement> powers{field.one()};
  for (unsigned i = 1; i < 2 * n; ++i) powers.push_back(powers.back() * (n == 1 ? field.one() : g));
  std::vector<std::vector<sym::RatFunc>> rows(n, std::vector<sym::RatFunc>(n, sym::RatFunc(ring)));
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned j = 0; j < n; ++j) {
      sym::MPoly form(ring);
      for (unsigned i = 0; i < n; ++i) {
        const std::uint32_t c = powers[i + j].coeffs()[r];
        if (c != 0) form = form + sym::MPoly::variable(ring, i).scale(c);
      }
      rows[r][j] = sym::RatFunc(form);
    }
  }
  return TorusSpec{p, n, field, ring, SymMatrix(rows)};
}

FiniteMatrix regular_rep(const TorusSpec& spec, const gf::FieldElement& z) {
  if (z.field() != spec.field) throw DomainMismatch("element is not in " + spec.field.literal());
  const gf::FieldSpec prime = spec.field.prime_subfield();
  const gf::FieldElement g = spec.n == 1 ? spec.field.one() : spec.field.generator_root();
  std::vector<std::vector<gf::FieldElement>> cols;
  gf::FieldElement cur = z;
  for (unsigned j = 0; j < spec.n; ++j) {
    cols.push_back(coords_in(cur.coeffs(), prime));
    cur = cur * g;
  }
  return FiniteMatrix::from_columns(cols);
}

gf::FieldElement torus_element(const TorusSpec& spec, const std::vector<gf::FieldElement>& coords) {
  if (coords.size() != spec.n) throw InvalidArgument("wrong number of torus coordinates");
  std::vector<std::int64_t> c;
  for (const auto& x : coords) {
    if (!x.in_prime_field()) throw DomainMismatch("torus coordinates must lie in F_p");
    c.push_back(x.prime_value());
  }
  return spec.field.from_coeffs(c);
}

bool torus_member(const TorusSpec& spec, const FiniteMatrix& a) {
  if (a.rows() != spec.n || a.cols() != spec.n) return false;
  const gf::FieldSpec& L = a(0, 0).field();
  sym::Assignment xi;
  for (unsigned i = 0; i < spec.n; ++i) xi.emplace(spec.ring.vars()[i], a(i, 0));
  if (specialize_matrix(spec.general_matrix, xi, L) != a) return false;
  return !det(a).is_zero();
}

std::vector<FiniteMatrix> torus_points(const TorusSpec& spec, const gf::FieldSpec& L, std::uint64_t budget) {
  if (L.p() != spec.p) throw DomainMismatch("torus points need a field of characteristic " + std::to_string(spec.p));
  const auto elems = gf::enumerate(L, budget);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < spec.n; ++i) {
    total *= elems.size();
    if (total > budget) throw BudgetExceeded("torus point enumeration exceeds budget");
  }
  std::vector<FiniteMatrix> out;
  std::vector<std::size_t> idx(spec.n, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    sym::Assignment xi;
    for (unsigned i = 0; i < spec.n; ++i) xi.emplace(spec.ring.vars()[i], elems[idx[i]]);
    FiniteMatrix m = specialize_matrix(spec.general_matrix, xi, L);
    if (!det(m).is_zero()) out.push_back(std::move(m));
    for (unsigned i = 0; i < spec.n; ++i) {
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

TorusGroupInfo order_and_cyclicity(const TorusSpec& spec, std::uint64_t budget) {
  const auto points = torus_points(spec, spec.field.prime_subfield(), budget);
  TorusGroupInfo info;
  info.order = points.size();
  for (const auto& m : points) {
    if (matrix_order(m, info.order) == info.order) {
      info.cyclic = true;
      info.generator = m;
      break;
    }
  }
  return info;
}

}  // namespace frobgen
