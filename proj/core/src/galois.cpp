#include "frobgen/galois.hpp"

#include "frobgen/fp_linalg.hpp"

namespace frobgen {

namespace {

const gf::FieldSpec& module_field(const FiniteModule& m) { return m.matrix()(0, 0).field(); }

}  // namespace

SolutionSpace module_solutions(const FiniteModule& m, unsigned M) {
  const gf::FieldSpec& base = module_field(m);
  const unsigned e = m.q().exponent;
  if (base.k() % e != 0) throw DomainMismatch("F_q is not contained in the coefficient field");
  const gf::FieldSpec big = extension_of(base, M);
  const auto emb = gf::embed_field(base, big);
  const FiniteMatrix a = m.matrix().map([&](const gf::FieldElement& x) { return emb.map(x); });
  const std::size_t n = m.dim();
  const unsigned K = big.k();
  const std::size_t dim = n * K;

  gf::fp::DenseMatrix lin(dim, dim);
  for (std::size_t slot = 0; slot < n; ++slot) {
    for (unsigned l = 0; l < K; ++l) {
      std::vector<gf::FieldElement> x(n, big.zero());
      std::vector<std::int64_t> c(K, 0);
      c[l] = 1;
      x[slot] = big.from_coeffs(c);
      const auto ax = a * frob_twist(x, m.q());
      const std::size_t col = slot * K + l;
      for (std::size_t r = 0; r < n; ++r) {
        const gf::FieldElement d = ax[r] - x[r];
        for (unsigned i = 0; i < K; ++i) lin.at(r * K + i, col) = d.coeffs()[i];
      }
    }
  }
  SolutionSpace s{big, {}, e};
  for (const auto& v : gf::fp::kernel_basis(lin, big.p())) {
    std::vector<gf::FieldElement> x;
    x.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::int64_t> c(v.begin() + static_cast<std::ptrdiff_t>(r * K),
                                  v.begin() + static_cast<std::ptrdiff_t>((r + 1) * K));
      x.push_back(big.from_coeffs(c));
    }
    s.kernel.push_back(std::move(x));
  }
  return s;
}

unsigned module_splitting_degree(const FiniteModule& m, unsigned m_max) {
  const unsigned bound = std::min(m_max, kSplittingDegreeCeiling);
  for (unsigned M = 1; M <= bound; ++M) {
    const SolutionSpace s = module_solutions(m, M);
    if (s.fq_dimension() > m.dim()) throw InternalError("solution space larger than the module dimension");
    if (s.fq_dimension() == m.dim()) return M;
  }
  throw BudgetExceeded("splitting degree exceeds bound " + std::to_string(bound));
}

std::uint64_t matrix_order(const FiniteMatrix& a, std::uint64_t limit) {
  FiniteMatrix acc = a;
  for (std::uint64_t j = 1; j <= limit; ++j) {
    if (acc.is_identity()) return j;
    acc = acc * a;
  }
  throw BudgetExceeded("matrix order exceeds " + std::to_string(limit));
}

FiniteMatrix solution_matrix(const SolutionSpace& s, std::size_t n) {
  std::vector<std::vector<gf::FieldElement>> chosen;
  for (const auto& v : s.kernel) {
    auto trial = chosen;
    trial.push_back(v);
    if (rank(FiniteMatrix::from_columns(trial)) == trial.size()) chosen = std::move(trial);
    if (chosen.size() == n) return FiniteMatrix::from_columns(chosen);
  }
  throw InternalError("solution space does not span E^n");
}

GaloisReport galois_order_of_specialization(const FiniteModule& m, unsigned m_max) {
  const unsigned M = module_splitting_degree(m, m_max);
  const SolutionSpace s = module_solutions(m, M);
  FiniteMatrix U = solution_matrix(s, m.dim());
  const unsigned k = module_field(m).k();
  FiniteMatrix rho = inverse(U) * frob_twist(U, FrobeniusQ{k});
  const std::uint64_t order = matrix_order(rho, 1U << 20U);
  if (order != M) {
    throw InternalError("Frobenius image has order " + std::to_string(order) + " but splitting degree is " +
                        std::to_string(M));
  }
  return GaloisReport{M, std::move(U), std::move(rho), order};
}

}  // namespace frobgen
