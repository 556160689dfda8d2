// Hand-rolled generators and small brute-force oracles shared by the unit tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frobgen/frobmod.hpp"
#include "frobgen/gf.hpp"
#include "frobgen/matfrob.hpp"
#include "frobgen/symfield.hpp"

namespace frobgen::testing {

inline constexpr std::uint64_t kSeed = 20240611;
inline constexpr int kCases = 150;

inline gf::FieldElement any_element(const gf::FieldSpec& f, std::mt19937_64& rng) {
  return gf::random_like(f.zero(), rng);
}

inline gf::FieldElement nonzero_element(const gf::FieldSpec& f, std::mt19937_64& rng) {
  for (;;) {
    gf::FieldElement x = any_element(f, rng);
    if (!x.is_zero()) return x;
  }
}

inline FiniteMatrix any_matrix(const gf::FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  FiniteMatrix m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = any_element(f, rng);
  }
  return m;
}

inline FiniteMatrix invertible_matrix(const gf::FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    FiniteMatrix m = any_matrix(f, n, rng);
    if (!det(m).is_zero()) return m;
  }
}

/// Random rational function with small numerator and nonzero denominator.
inline sym::RatFunc any_ratfunc(const sym::Ring& ring, std::mt19937_64& rng, unsigned degree = 3) {
  const sym::MPoly num = sym::random_poly(ring, rng, degree, 4);
  for (;;) {
    const sym::MPoly den = sym::random_poly(ring, rng, degree, 3);
    if (!den.is_zero()) return sym::RatFunc(num, den);
  }
}

inline sym::RatFunc any_polynomial(const sym::Ring& ring, std::mt19937_64& rng, unsigned degree = 4) {
  return sym::RatFunc(sym::random_poly(ring, rng, degree, 5));
}

/// Index of an element in enumeration order (base-p digits, c_0 least significant).
inline std::uint64_t index_of(const gf::FieldElement& x) {
  std::uint64_t idx = 0;
  const auto& c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * x.field().p() + c[i];
  return idx;
}

/// Order by repeated multiplication, independent of the library's factoring route.
inline std::uint64_t naive_order(const gf::FieldElement& x) {
  gf::FieldElement y = x;
  std::uint64_t e = 1;
  while (!y.is_one()) {
    y *= x;
    ++e;
  }
  return e;
}

/// Smallest M with A X^(q) = X having q^{n} solutions in F_{q^M}, by counting
/// solutions of the vector equation over every element tuple. Only for tiny fields.
inline unsigned brute_splitting_degree(const FiniteMatrix& a, FrobeniusQ q, unsigned m_max) {
  const gf::FieldSpec& base = a(0, 0).field();
  const std::size_t n = a.rows();
  std::uint64_t want = 1;
  for (std::size_t i = 0; i < n * q.exponent; ++i) want *= base.p();
  for (unsigned M = 1; M <= m_max; ++M) {
    const gf::FieldSpec E = gf::default_field(base.p(), base.k() * M);
    const auto emb = gf::embed_field(base, E);
    const FiniteMatrix ae = a.map([&](const gf::FieldElement& x) { return emb.map(x); });
    const auto elems = gf::enumerate(E);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= elems.size();
    std::uint64_t count = 0;
    std::vector<std::size_t> idx(n, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
      std::vector<gf::FieldElement> v;
      for (std::size_t i = 0; i < n; ++i) v.push_back(elems[idx[i]]);
      if (ae * frob_twist(v, q) == v) ++count;
      for (std::size_t i = 0; i < n && ++idx[i] == elems.size(); ++i) idx[i] = 0;
    }
    if (count == want) return M;
  }
  return 0;
}

}  // namespace frobgen::testing
