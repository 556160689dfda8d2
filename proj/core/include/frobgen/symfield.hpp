// Multivariate polynomials and canonical rational functions over a prime
// field F_p in named indeterminates, with specialization and a text parser.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobgen/gf.hpp"

namespace frobgen::sym {

/// Polynomial ring F_p[vars]. Two rings are equal when p and the variable
/// list agree.
class Ring {
 public:
  Ring(std::uint32_t p, std::vector<std::string> vars);

  std::uint32_t p() const { return data_->p; }
  const std::vector<std::string>& vars() const { return data_->vars; }
  std::size_t nvars() const { return data_->vars.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  gf::FieldSpec base() const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }
  /// "F_5[s,t]".
  std::string describe() const;

 private:
  struct Data {
    std::uint32_t p;
    std::vector<std::string> vars;
  };
  std::shared_ptr<const Data> data_;
};

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exp;
  std::uint32_t coeff;
  bool operator==(const Term& o) const { return coeff == o.coeff && exp == o.exp; }
};

/// Graded lexicographic comparison, variable 0 most significant. True if a > b.
bool grlex_greater(const Exponents& a, const Exponents& b);

class MPoly {
 public:
  explicit MPoly(Ring ring) : ring_(std::move(ring)) {}

  static MPoly constant(const Ring& ring, std::int64_t c);
  static MPoly variable(const Ring& ring, std::size_t index, std::uint32_t power = 1);
  static MPoly monomial(const Ring& ring, Exponents exp, std::uint32_t coeff);
  /// Combines like terms, drops zeros and sorts.
  static MPoly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  /// Terms in descending graded-lex order.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  std::uint32_t constant_value() const;
  const Term& leading() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scale(std::uint32_t c) const;
  MPoly pow(std::uint64_t e) const;
  /// f^{p^e}; coefficients lie in F_p so only exponents change.
  MPoly frobenius_power(unsigned e) const;
  /// Divides by the leading coefficient (zero stays zero).
  MPoly monic() const;

  bool operator==(const MPoly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Explicit '*' and '^', descending graded-lex order, e.g. "4*s^15 + s*t^14".
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// Quotient when g divides f exactly.
std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);
/// Monic greatest common divisor (recursive content / primitive PRS).
MPoly gcd(const MPoly& f, const MPoly& g);
/// Coefficients of f as a polynomial in variable var, index = degree.
std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var);

/// Evaluates f at values (one per ring variable) in a field of characteristic p.
gf::FieldElement evaluate(const MPoly& f, const std::vector<gf::FieldElement>& values, const gf::FieldSpec& target);

class RatFunc {
 public:
  explicit RatFunc(const Ring& ring) : num_(ring), den_(MPoly::constant(ring, 1)) {}
  explicit RatFunc(MPoly num);
  /// Canonicalizes; throws InvalidArgument for a zero denominator.
  RatFunc(MPoly num, MPoly den);

  static RatFunc constant(const Ring& ring, std::int64_t c);
  static RatFunc variable(const Ring& ring, const std::string& name);

  const Ring& ring() const { return num_.ring(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  /// Throws InvalidArgument for zero.
  RatFunc inverse() const;
  RatFunc pow(std::uint64_t e) const;
  RatFunc frobenius_power(unsigned e) const;

  RatFunc zero_like() const { return RatFunc(ring()); }
  RatFunc one_like() const { return constant(ring(), 1); }
  RatFunc scalar_like(std::int64_t v) const { return constant(ring(), v); }

  /// Structural equality of canonical forms.
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Re-parseable text, e.g. "(s^2 + 1)/(s*t)" or "4*s^15 + s*t^14".
  std::string to_string() const;

 private:
  MPoly num_;
  MPoly den_;
};

/// a = b decided by a*den(b) == b*den(a); redundant with operator==.
bool equal_by_cross_multiplication(const RatFunc& a, const RatFunc& b);

using Assignment = std::map<std::string, gf::FieldElement>;

/// Value of f at the assignment in target (an extension of F_p is allowed).
/// Throws DenominatorVanishes at a pole, InvalidArgument for a missing variable.
gf::FieldElement specialize(const RatFunc& f, const Assignment& xi, const gf::FieldSpec& target);

/// Replaces variable i by images[i]; all images share one ring.
RatFunc substitute(const RatFunc& f, const std::vector<RatFunc>& images);
/// Same polynomial read in a larger ring whose variable list contains all of f's.
RatFunc extend_ring(const RatFunc& f, const Ring& bigger);

std::uint32_t characteristic(const RatFunc& f);

/// Random polynomial of total degree <= 1 in the ring variables, as a RatFunc.
RatFunc random_like(const RatFunc& proto, std::mt19937_64& rng);

/// Random polynomial with at most max_terms terms of total degree <= max_degree.
MPoly random_poly(const Ring& ring, std::mt19937_64& rng, unsigned max_degree, unsigned max_terms);

/// Parses the expression grammar:
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base := int | var | '(' expr ')'
/// Implicit multiplication is rejected.
RatFunc parse_expr(const std::string& text, const Ring& ring);

/// Splits "s=1,t=2*g+1" and parses every value in target (g names the
/// modulus root of an extension field).
Assignment parse_assignment(const std::string& text, const gf::FieldSpec& target);

}  // namespace frobgen::sym
