// Frobenius modules (K^n, Phi_A) with Phi(X) = A X^(q): cyclic bases,
// companion forms and extraction of the associated linearized polynomial.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobgen/error.hpp"
#include "frobgen/linpoly.hpp"
#include "frobgen/matfrob.hpp"

namespace frobgen {

inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr unsigned kCyclicRandomBudget = 64;

template <FieldLike T>
class FrobModule {
 public:
  /// Throws SingularMatrix when det(A) = 0.
  static FrobModule make(Matrix<T> a, FrobeniusQ q) {
    if (!a.square()) throw InvalidArgument("module matrix must be square");
    if (det(a).is_zero()) throw SingularMatrix("module matrix has zero determinant");
    return FrobModule(std::move(a), q);
  }

  const Matrix<T>& matrix() const { return a_; }
  FrobeniusQ q() const { return q_; }
  std::size_t dim() const { return a_.rows(); }

  /// Phi(v) = A v^(q).
  std::vector<T> apply_phi(const std::vector<T>& v) const { return a_ * frob_twist(v, q_); }

 private:
  FrobModule(Matrix<T> a, FrobeniusQ q) : a_(std::move(a)), q_(q) {}
  Matrix<T> a_;
  FrobeniusQ q_;
};

template <FieldLike T>
struct CompanionForm {
  Matrix<T> B;
  Matrix<T> N;
  std::vector<T> last_column;
  std::vector<T> cyclic_vector;
  /// "e_1", or "random#3" for the fourth seeded candidate.
  std::string vector_label;
  std::uint64_t seed = kDefaultSeed;
};

/// Companion form for the basis v, Phi v, ..., Phi^{n-1} v. Throws
/// NoCyclicVector if these are dependent.
template <FieldLike T>
CompanionForm<T> companion_from_vector(const FrobModule<T>& m, const std::vector<T>& v, std::string label,
                                       std::uint64_t seed = kDefaultSeed) {
  const std::size_t n = m.dim();
  if (v.size() != n) throw InvalidArgument("cyclic vector has wrong length");
  std::vector<std::vector<T>> cols{v};
  for (std::size_t i = 1; i < n; ++i) cols.push_back(m.apply_phi(cols.back()));
  Matrix<T> N = Matrix<T>::from_columns(cols);
  if (det(N).is_zero()) throw NoCyclicVector("vector " + label + " is not cyclic");
  Matrix<T> B = frobenius_conjugate(m.matrix(), N, m.q());
  std::vector<T> last = B.column(n - 1);
  return CompanionForm<T>{std::move(B), std::move(N), std::move(last), v, std::move(label), seed};
}

/// Tries e_1, ..., e_n, then `budget` seeded pseudorandom vectors.
template <FieldLike T>
CompanionForm<T> cyclic_basis(const FrobModule<T>& m, std::uint64_t seed = kDefaultSeed,
                              unsigned budget = kCyclicRandomBudget) {
  const std::size_t n = m.dim();
  const T& proto = m.matrix()(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> e(n, proto.zero_like());
    e[i] = proto.one_like();
    try {
      return companion_from_vector(m, e, "e_" + std::to_string(i + 1), seed);
    } catch (const NoCyclicVector&) {
    }
  }
  std::mt19937_64 rng(seed);
  for (unsigned r = 0; r < budget; ++r) {
    std::vector<T> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_like(proto, rng));
    try {
      return companion_from_vector(m, v, "random#" + std::to_string(r), seed);
    } catch (const NoCyclicVector&) {
    }
  }
  throw NoCyclicVector("no cyclic vector among " + std::to_string(n) + " basis vectors and " + std::to_string(budget) +
                       " seeded random vectors (seed " + std::to_string(seed) + ")");
}

enum class ExtractionConvention {
  /// Solve B^T x = x^(q) along the subdiagonal chain x_{i+1} = sigma_{i+1}^{-1} x_i^q.
  kTransposeChain,
  /// Y^{q^n} - a_0 Y - ... - a_{n-1} Y^{q^{n-1}} read off the raw last column.
  kLastColumn,
};

/// True iff only the subdiagonal and the last column are nonzero and the
/// subdiagonal has no zero entry.
template <FieldLike T>
bool is_companion_shaped(const Matrix<T>& b) {
  const std::size_t n = b.rows();
  if (!b.square()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const bool sub = i == j + 1;
      if (sub && b(i, j).is_zero()) return false;
      if (!sub && !b(i, j).is_zero()) return false;
    }
  }
  return true;
}

/// Linearized polynomial of a companion-shaped matrix.
template <FieldLike T>
LinearizedPoly<T> extract_generic_polynomial(const Matrix<T>& b, FrobeniusQ q,
                                             ExtractionConvention convention = ExtractionConvention::kTransposeChain) {
  if (!is_companion_shaped(b)) throw InvalidArgument("matrix is not in companion shape");
  const std::size_t n = b.rows();
  const T one = b(0, 0).one_like();
  std::vector<T> coeffs;
  coeffs.reserve(n + 1);
  if (convention == ExtractionConvention::kLastColumn) {
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(-b(i, n - 1));
  } else {
    std::vector<T> kappa{one};
    for (std::size_t i = 1; i < n; ++i) kappa.push_back(kappa.back().frobenius_power(q.exponent) / b(i, i - 1));
    const T top = kappa.back().frobenius_power(q.exponent);
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(-(b(i, n - 1) * kappa[i] / top));
  }
  coeffs.push_back(one);
  return LinearizedPoly<T>(characteristic(one), q, std::move(coeffs));
}

template <FieldLike T>
LinearizedPoly<T> extract_generic_polynomial(const CompanionForm<T>& cf, FrobeniusQ q,
                                             ExtractionConvention convention = ExtractionConvention::kTransposeChain) {
  return extract_generic_polynomial(cf.B, q, convention);
}

/// A(xi) over target; throws DenominatorVanishes or SingularMatrix.
inline FrobModule<gf::FieldElement> specialize_module(const FrobModule<sym::RatFunc>& m, const sym::Assignment& xi,
                                                      const gf::FieldSpec& target) {
  FiniteMatrix a = specialize_matrix(m.matrix(), xi, target);
  try {
    return FrobModule<gf::FieldElement>::make(std::move(a), m.q());
  } catch (const SingularMatrix&) {
    throw SingularMatrix("singular specialization");
  }
}

/// True iff B = U^{-1} A U^(q) holds exactly; throws SingularMatrix for singular U.
template <FieldLike T>
bool check_equivalence_witness(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& u, FrobeniusQ q) {
  return frobenius_conjugate(a, u, q) == b;
}

}  // namespace frobgen
