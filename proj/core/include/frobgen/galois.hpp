// Solution spaces of A X^(q) = X over finite fields, splitting degrees of
// finite Frobenius modules and the Frobenius image U^{-1} U^(|F|).
#pragma once

#include <cstdint>
#include <vector>

#include "frobgen/frobmod.hpp"

namespace frobgen {

using FiniteModule = FrobModule<gf::FieldElement>;

struct SolutionSpace {
  gf::FieldSpec field;
  /// F_p-basis of {X in E^n : A X^(q) = X}.
  std::vector<std::vector<gf::FieldElement>> kernel;
  unsigned q_exponent = 1;

  unsigned fq_dimension() const { return static_cast<unsigned>(kernel.size()) / q_exponent; }
};

/// Solutions in the degree-M extension E of the coefficient field F of m.
SolutionSpace module_solutions(const FiniteModule& m, unsigned M);

/// Minimal M <= m_max with an n-dimensional solution space over F_q.
unsigned module_splitting_degree(const FiniteModule& m, unsigned m_max);

/// Smallest j in [1, limit] with a^j = I; throws BudgetExceeded otherwise.
std::uint64_t matrix_order(const FiniteMatrix& a, std::uint64_t limit = 1U << 20U);

/// Matrix over E whose columns are n E-independent solutions, chosen greedily
/// from the F_p-basis. Requires a full solution space.
FiniteMatrix solution_matrix(const SolutionSpace& s, std::size_t n);

struct GaloisReport {
  unsigned splitting_degree = 0;
  /// A Lang-Steinberg preimage of A: A U^(q) = U.
  FiniteMatrix U;
  /// U^{-1} U^(|F|), the image of the Frobenius of E/F.
  FiniteMatrix rho;
  std::uint64_t rho_order = 0;
};

/// Galois group order of the specialized module (cyclic, generated by the
/// Frobenius of F), cross-checked against the order of rho.
GaloisReport galois_order_of_specialization(const FiniteModule& m, unsigned m_max);

}  // namespace frobgen
