// q-linearized polynomials sum c_i Y^{q^i} (optionally plus a constant),
// their roots over finite fields as exact F_p-linear algebra, and splitting
// degrees.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobgen/embedding.hpp"
#include "frobgen/error.hpp"
#include "frobgen/matfrob.hpp"

namespace frobgen {

/// Hard ceiling for splitting-degree sweeps.
inline constexpr unsigned kSplittingDegreeCeiling = 64;

template <FieldLike T>
class LinearizedPoly {
 public:
  /// coeffs = c_0, ..., c_n with c_n = 1.
  LinearizedPoly(std::uint32_t p, FrobeniusQ q, std::vector<T> coeffs, std::optional<T> affine = std::nullopt)
      : p_(p), q_(q), coeffs_(std::move(coeffs)), affine_(std::move(affine)) {
    if (coeffs_.empty()) throw InvalidArgument("linearized polynomial needs at least one coefficient");
    const T& lead = coeffs_.back();
    if (!(lead == lead.one_like())) throw InvalidArgument("linearized polynomial must be monic");
    if (affine_ && affine_->is_zero()) affine_.reset();
  }

  std::uint32_t p() const { return p_; }
  FrobeniusQ q() const { return q_; }
  std::uint64_t q_value() const { return power(p_, q_.exponent); }
  std::size_t q_degree() const { return coeffs_.size() - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const std::optional<T>& affine_part() const { return affine_; }
  bool separable() const { return !coeffs_[0].is_zero(); }
  bool is_affine() const { return affine_.has_value(); }

  /// Degree of the monomial Y^{q^i}.
  std::uint64_t exponent_of(std::size_t i) const { return power(q_value(), static_cast<unsigned>(i)); }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(coeffs_[0]))>;
    std::vector<U> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(f(x));
    std::optional<U> a;
    if (affine_) a = f(*affine_);
    return LinearizedPoly<U>(p_, q_, std::move(c), std::move(a));
  }

  bool operator==(const LinearizedPoly& o) const {
    return p_ == o.p_ && q_.exponent == o.q_.exponent && coeffs_ == o.coeffs_ && affine_ == o.affine_;
  }

  /// "Y^25 + (4*s^15 + ...)*Y^5 + (...)*Y", descending q-powers.
  std::string to_string(const std::string& var = "Y") const {
    std::string out;
    auto append = [&](const std::string& piece) {
      if (!out.empty()) out += " + ";
      out += piece;
    };
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const T& c = coeffs_[i];
      if (c.is_zero()) continue;
      const std::uint64_t e = exponent_of(i);
      const std::string mono = e == 1 ? var : var + "^" + std::to_string(e);
      if (c == c.one_like()) {
        append(mono);
      } else {
        append(wrap(c.to_string()) + "*" + mono);
      }
    }
    if (affine_) append(wrap(affine_->to_string()));
    return out;
  }

 private:
  static std::string wrap(const std::string& s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; }
  static std::uint64_t power(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
      if (r > UINT64_MAX / b) throw BudgetExceeded("linearized exponent overflows 64 bits");
      r *= b;
    }
    return r;
  }

  std::uint32_t p_;
  FrobeniusQ q_;
  std::vector<T> coeffs_;
  std::optional<T> affine_;
};

using SymLinPoly = LinearizedPoly<sym::RatFunc>;
using FiniteLinPoly = LinearizedPoly<gf::FieldElement>;

/// Parses the print format back; coefficients are expressions in ring.
SymLinPoly parse_linearized(const std::string& text, const sym::Ring& ring, FrobeniusQ q, const std::string& var = "Y");

/// f(y); y must lie in the coefficient field of f.
gf::FieldElement eval(const FiniteLinPoly& f, const gf::FieldElement& y);

/// Coefficients carried along an embedding.
FiniteLinPoly embed(const FiniteLinPoly& f, const gf::FieldEmbedding& emb);

/// Specialization of a symbolic polynomial; throws DenominatorVanishes.
FiniteLinPoly specialize(const SymLinPoly& f, const sym::Assignment& xi, const gf::FieldSpec& target);

/// Coefficient field of f, or its degree-M extension (default modulus).
gf::FieldSpec extension_of(const gf::FieldSpec& base, unsigned M);

struct RootSpace {
  gf::FieldSpec field;
  /// F_p-basis of the roots of the linear part.
  std::vector<gf::FieldElement> kernel;
  /// A root of the affine polynomial when one exists.
  std::optional<gf::FieldElement> particular;
  bool solvable = true;
  unsigned q_exponent = 1;

  /// Dimension of the root space over F_q.
  unsigned fq_dimension() const { return static_cast<unsigned>(kernel.size()) / q_exponent; }
};

/// Roots of f in the degree-M extension of its coefficient field F.
RootSpace root_space(const FiniteLinPoly& f, unsigned M);

/// Minimal M <= m_max such that all q^n roots lie in the degree-M extension
/// of F; throws BudgetExceeded otherwise.
unsigned splitting_degree(const FiniteLinPoly& f, unsigned n_expected, unsigned m_max);

}  // namespace frobgen
