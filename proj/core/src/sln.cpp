#include "frobgen/generators.hpp"

namespace frobgen {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT32_MAX / b) throw BudgetExceeded("exponent q^n too large");
    r *= b;
  }
  return r;
}

/// Coefficients by q-power of a linearized expression; Frobenius shifts them.
std::vector<sym::RatFunc> frobenius_shift(const std::vector<sym::RatFunc>& x) {
  std::vector<sym::RatFunc> r{x[0].zero_like()};
  for (const auto& c : x) r.push_back(c.frobenius_power(1));
  return r;
}

}  // namespace

SymLinPoly sln_closed_form(std::uint32_t q, unsigned n) {
  const GroupParam param = sln_param(q, n);
  const sym::Ring& ring = param.ring();
  const sym::RatFunc s = sym::RatFunc::variable(ring, "s");
  const std::uint64_t top = ipow(q, n - 1);
  std::vector<sym::RatFunc> coeffs;
  coeffs.push_back(sym::RatFunc::constant(ring, n % 2 == 0 ? 1 : -1) * s.pow(top - 1));
  for (unsigned i = 1; i < n; ++i) {
    const sym::RatFunc t = sym::RatFunc::variable(ring, "t_" + std::to_string(i));
    coeffs.push_back(t * s.pow(top - ipow(q, i - 1)));
  }
  coeffs.push_back(sym::RatFunc::constant(ring, 1));
  return SymLinPoly(q, FrobeniusQ{1}, std::move(coeffs));
}

SymLinPoly sln_elimination_chain(std::uint32_t q, unsigned n) {
  const GroupParam param = sln_param(q, n);
  const SymMatrix& a = param.matrix();
  const sym::RatFunc one = sym::RatFunc::constant(param.ring(), 1);

  // Rows j < n - 1 of A^T x = x^(q) read A[j+1][j] x_{j+1} = x_j^q.
  for (unsigned j = 0; j + 1 < n; ++j) {
    for (unsigned r = 0; r < n; ++r) {
      if (r != j + 1 && !a(r, j).is_zero()) throw InternalError("SL_n matrix is not in chain form");
    }
  }
  std::vector<std::vector<sym::RatFunc>> x{{one}};
  for (unsigned j = 0; j + 1 < n; ++j) {
    auto next = frobenius_shift(x[j]);
    for (auto& c : next) c = c / a(j + 1, j);
    x.push_back(std::move(next));
  }
  // Last row: sum_r A[r][n-1] x_r - x_{n-1}^q = 0.
  std::vector<sym::RatFunc> h(n + 1, one.zero_like());
  for (unsigned r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < x[r].size(); ++i) h[i] += a(r, n - 1) * x[r][i];
  }
  const auto last = frobenius_shift(x[n - 1]);
  for (std::size_t i = 0; i < last.size(); ++i) h[i] -= last[i];
  const sym::RatFunc lead = h[n];
  for (auto& c : h) c = c / lead;
  return SymLinPoly(q, FrobeniusQ{1}, std::move(h));
}

SymLinPoly sln_generic_poly(std::uint32_t q, unsigned n) {
  SymLinPoly closed = sln_closed_form(q, n);
  const SymLinPoly chain = sln_elimination_chain(q, n);
  if (!(closed == chain)) {
    throw InternalError("SL_n routes disagree: closed form " + closed.to_string() + " vs chain " + chain.to_string());
  }
  return closed;
}

}  // namespace frobgen
