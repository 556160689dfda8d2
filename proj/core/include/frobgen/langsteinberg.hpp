// Parametrized matrix groups A: affine space -> G, the Lang-Steinberg map
// lambda(X) = X (X^(q))^{-1}, lambda* generators and brute-force fibers over
// small finite fields.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobgen/frobmod.hpp"
#include "frobgen/tori.hpp"

namespace frobgen {

enum class GroupKind { kUnipotent, kTorus, kSpecialLinear };

/// Entry (r, c) = constant + sum_i slope_i * u_i with F_p coefficients, plus
/// d pivot positions from which the coordinates u are read back.
struct LinearStructure {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::uint32_t> constant;
  std::vector<std::vector<std::uint32_t>> slope;
  /// Row-major positions r * n + c.
  std::vector<std::size_t> pivots;
  /// d x d over F_p, row-major: u = pivot_inverse * (M[pivots] - constant[pivots]).
  std::vector<std::uint32_t> pivot_inverse;
};

class GroupParam {
 public:
  GroupParam(std::string name, GroupKind kind, SymMatrix matrix, std::optional<sym::RatFunc> validity = std::nullopt);

  const std::string& name() const { return name_; }
  GroupKind kind() const { return kind_; }
  const sym::Ring& ring() const { return matrix_(0, 0).ring(); }
  std::size_t n() const { return matrix_.rows(); }
  std::size_t d() const { return ring().nvars(); }
  std::uint32_t p() const { return ring().p(); }
  const SymMatrix& matrix() const { return matrix_; }
  const std::optional<sym::RatFunc>& validity() const { return validity_; }
  const std::optional<LinearStructure>& linear() const { return linear_; }

  /// Exact membership: the linear shape equations and det != 0 for linear
  /// families, det = 1 for SL_n.
  bool is_member(const FiniteMatrix& a) const;

  /// Coordinates of a member read from the pivot entries (linear families).
  template <FieldLike T>
  std::vector<T> coordinates(const Matrix<T>& a) const {
    const LinearStructure& ls = require_linear();
    const T& proto = a(0, 0);
    std::vector<T> rhs;
    for (std::size_t j = 0; j < ls.d; ++j) {
      const std::size_t pos = ls.pivots[j];
      rhs.push_back(a(pos / ls.n, pos % ls.n) - proto.scalar_like(ls.constant[pos]));
    }
    std::vector<T> u(ls.d, proto.zero_like());
    for (std::size_t i = 0; i < ls.d; ++i) {
      for (std::size_t j = 0; j < ls.d; ++j) {
        const std::uint32_t c = ls.pivot_inverse[i * ls.d + j];
        if (c != 0) u[i] = u[i] + proto.scalar_like(c) * rhs[j];
      }
    }
    return u;
  }

  /// The family member at coordinates u (linear families).
  template <FieldLike T>
  Matrix<T> at(const std::vector<T>& u) const {
    const LinearStructure& ls = require_linear();
    if (u.size() != ls.d) throw InvalidArgument("wrong number of coordinates for " + name_);
    if (u.empty()) throw InvalidArgument("family " + name_ + " has no coordinates");
    const T& proto = u[0];
    Matrix<T> m(ls.n, ls.n, proto.zero_like());
    for (std::size_t pos = 0; pos < ls.n * ls.n; ++pos) {
      T v = proto.scalar_like(ls.constant[pos]);
      for (std::size_t i = 0; i < ls.d; ++i) {
        const std::uint32_t c = ls.slope[i][pos];
        if (c != 0) v = v + proto.scalar_like(c) * u[i];
      }
      m(pos / ls.n, pos % ls.n) = v;
    }
    return m;
  }

  /// Specialization of the symbolic matrix (any family).
  FiniteMatrix at_assignment(const sym::Assignment& xi, const gf::FieldSpec& target) const {
    return specialize_matrix(matrix_, xi, target);
  }

 private:
  const LinearStructure& require_linear() const;

  std::string name_;
  GroupKind kind_;
  SymMatrix matrix_;
  std::optional<sym::RatFunc> validity_;
  std::optional<LinearStructure> linear_;
};

/// Detects an affine-linear parametrization; nullopt otherwise.
std::optional<LinearStructure> detect_linear_structure(const SymMatrix& m);

/// Q_8 inside the unipotent 4 x 4 group over F_2:
/// [[1,t_1,t_2,t_3],[0,1,0,t_1],[0,0,1,t_1+t_2],[0,0,0,1]] with validity t_1 t_2 (t_1 + t_2).
GroupParam q8_param();
GroupParam torus_param(const TorusSpec& spec);
/// The matrix with top-right (-1)^{n+1} s^{-1}, subdiagonal s, 1, ..., 1 and
/// last column -t_1, ..., -t_{n-1} below the corner; q prime.
GroupParam sln_param(std::uint32_t q, unsigned n);

/// lambda(A(t)) = A(t) (A(t)^(q))^{-1}; throws SingularMatrix.
SymMatrix symbolic_lambda(const GroupParam& param, FrobeniusQ q);

/// Coordinates of lambda(A(t)); verified by resubstitution. Throws
/// InvalidArgument when the family has no coordinate rule.
std::vector<sym::RatFunc> lambda_star_generators(const GroupParam& param, FrobeniusQ q);

/// All members over L (coordinates enumerated in L^d).
std::vector<FiniteMatrix> group_points(const GroupParam& param, const gf::FieldSpec& L,
                                       std::uint64_t budget = 5'000'000);

/// All U in G(L) with lambda(U) = A; A must have entries in L.
std::vector<FiniteMatrix> brute_force_fiber(const FiniteMatrix& a, const GroupParam& param, const gf::FieldSpec& L,
                                            FrobeniusQ q, std::uint64_t budget = 5'000'000);

/// The same fiber computed without enumeration: for a linear family that is
/// closed under multiplication, lambda(at(u)) = A is the affine F_p-linear
/// system u = coords(A at(u^(q))), solved exactly over L.
std::vector<FiniteMatrix> solve_fiber_linear(const FiniteMatrix& a, const GroupParam& param, const gf::FieldSpec& L,
                                             FrobeniusQ q, std::uint64_t budget = 1U << 20U);

/// Partition of G(L) by lambda-image, keyed by the image's text form.
std::map<std::string, std::vector<FiniteMatrix>> lambda_fibers(const GroupParam& param, const gf::FieldSpec& L,
                                                               FrobeniusQ q, std::uint64_t budget = 5'000'000);

struct FiberSearch {
  unsigned degree = 0;
  gf::FieldSpec field;
  std::vector<FiniteMatrix> fiber;
};

/// Smallest m <= m_max with a nonempty fiber over the degree-m extension of
/// the field of A. Throws BudgetExceeded when none is found.
FiberSearch minimal_fiber(const FiniteMatrix& a, const GroupParam& param, FrobeniusQ q, unsigned m_max,
                          std::uint64_t budget = 5'000'000);

struct EquivalenceWitness {
  FiniteMatrix Y;
  FiniteMatrix B;
  unsigned attempts = 0;
};

/// Seeded search for Y in G(L) with B = Y^{-1} A Y^(q) satisfying g(B) != 0
/// for the validity polynomial g of the family.
EquivalenceWitness find_nonvanishing_equivalent(const FiniteMatrix& a, const GroupParam& param, FrobeniusQ q,
                                                std::uint64_t seed = kDefaultSeed, unsigned budget = 4096);

}  // namespace frobgen
