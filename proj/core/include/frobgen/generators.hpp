// End-to-end constructions: the C_{2^m} generic polynomial over F_p with its
// 2-adic case analysis, the SL_n generic polynomial by two routes, and
// executable reproductions of the C_8 / F_5 and Q_8 worked examples.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobgen/galois.hpp"
#include "frobgen/langsteinberg.hpp"
#include "frobgen/tori.hpp"

namespace frobgen {

using BigInt = boost::multiprecision::cpp_int;

/// 2-adic valuation; throws InvalidArgument for a < 1.
unsigned v2(std::uint64_t a);
unsigned v2(const BigInt& a);
/// v2(p^N - 1) for odd p, computed modulo 2^64; throws BudgetExceeded if the
/// valuation reaches 64.
unsigned v2_power_minus_one(std::uint64_t p, std::uint64_t N);
/// Order of the odd number p in (Z/2^m Z)^*, m <= 62.
std::uint64_t order_mod_pow2(std::uint64_t p, unsigned m);

enum class Cyclic2Case { kKummer, kMinusOne, kTorus };
std::string to_string(Cyclic2Case c);

struct Cyclic2Plan {
  std::uint32_t p = 0;
  unsigned m = 0;
  Cyclic2Case kind = Cyclic2Case::kKummer;
  /// Torus case only: n = ord(p mod 2^m), d = (p^n - 1) / 2^m.
  unsigned n = 0;
  BigInt d = 0;
};

/// Throws InvalidArgument unless p is an odd prime and 1 <= m <= 62.
Cyclic2Plan cyclic2_plan(std::int64_t p, unsigned m);

struct Cyclic2Metadata {
  std::uint64_t seed = kDefaultSeed;
  std::string field;
  std::string modulus;
  std::string basis;
  std::string cyclic_vector;
  std::string d;
  /// Largest total degree among the entries of A^d.
  unsigned power_entry_degree = 0;
};

struct Cyclic2Result {
  Cyclic2Plan plan;
  /// Printed polynomial: the linearized polynomial, or "Y^{2^m} - t".
  std::string polynomial;
  std::vector<std::string> parameters;
  std::optional<TorusSpec> torus;
  std::optional<SymMatrix> A;
  std::optional<SymMatrix> Ad;
  std::optional<CompanionForm<sym::RatFunc>> companion;
  std::optional<SymLinPoly> f;
  Cyclic2Metadata meta;
};

/// Limit on the number of monomials of degree D = d * (1 + p + ... + p^{n-1})
/// in n variables, a proxy for the size of the output coefficients.
inline constexpr std::uint64_t kCyclic2TermBudget = 20000;

/// Torus case: A = general torus matrix, A^d, cyclic basis, transpose-chain
/// polynomial. For (p, m) = (5, 3) the modulus x^2 - 2 and v = e_1 are fixed.
/// Kummer case: Y^{2^m} - t. Minus-one case: throws ExistenceOnly.
Cyclic2Result cyclic2_generic_poly(std::int64_t p, unsigned m, std::uint64_t seed = kDefaultSeed,
                                   std::uint64_t term_budget = kCyclic2TermBudget);

/// Printed degree-8 factors of the C_8 / F_5 polynomial, in s, t and y.
const std::vector<std::string>& c8f5_printed_factors();
/// Printed f(Y) of the C_8 / F_5 example.
const std::string& c8f5_printed_polynomial();

/// y * prod(factors) == f(y) over F_p[vars, y]; factors are expressions in
/// the ring of f extended by y.
bool verify_factorization(const SymLinPoly& f, const std::vector<std::string>& factors);
/// The pipeline output for (5, 3) against the printed factors.
bool verify_c8f5_factorization();

/// f(Y) = Y^{q^n} + sum t_i s^{q^{n-1} - q^{i-1}} Y^{q^i} + (-1)^n s^{q^{n-1} - 1} Y.
SymLinPoly sln_closed_form(std::uint32_t q, unsigned n);
/// Substitutes x_1 = Y, x_{j+1} = x_j^q / A[j+1][j] into the last equation of
/// A^T x = x^(q) and normalizes to a monic polynomial.
SymLinPoly sln_elimination_chain(std::uint32_t q, unsigned n);
/// Both routes; throws InternalError if they differ.
SymLinPoly sln_generic_poly(std::uint32_t q, unsigned n);

/// Printed Lang-Steinberg triple of the Q_8 example, in t_1, t_2, t_3.
const std::vector<std::string>& q8_printed_triple();
/// Printed Q_8 polynomial in a, b, c (affine, q = 2).
const std::string& q8_printed_polynomial_text();
SymLinPoly q8_printed_polynomial();
/// The x_1-eliminant of A X^(2) = X on the slice x_4 = 1, derived by hand:
/// equal to the printed polynomial except for a^2*b^4 in place of a^4*b^2.
const std::string& q8_eliminant_polynomial_text();
SymLinPoly q8_eliminant_polynomial();

struct Q8Point {
  /// (a, b, c) in F_{2^r}.
  std::vector<gf::FieldElement> abc;
  unsigned r = 0;
  unsigned system_degree = 0;
  unsigned polynomial_degree = 0;
  unsigned eliminant_degree = 0;
  std::size_t fiber_size = 0;
  bool rho_in_q8 = false;
  bool rho_order_matches = false;
  bool agrees() const {
    return system_degree == polynomial_degree && 8 % system_degree == 0 && rho_in_q8 && rho_order_matches;
  }
  bool eliminant_agrees() const { return system_degree == eliminant_degree; }
};

struct Q8Report {
  std::vector<sym::RatFunc> computed_triple;
  std::vector<sym::RatFunc> printed_triple;
  bool triple_matches = false;
  SymLinPoly printed_polynomial;
  SymLinPoly eliminant_polynomial;
  std::vector<Q8Point> points;
  unsigned skipped_invalid = 0;
  bool all_points_agree() const;
  bool eliminant_agrees_everywhere() const;
};

/// Exact triple comparison plus, at every valid point of F_4 and F_8 and at
/// `samples` seeded valid points of F_16, the splitting degree of
/// A X^(2) = X, those of the printed polynomial and of the eliminant, and the
/// Frobenius image from the Lang-Steinberg fiber.
Q8Report q8_reproduction(std::uint64_t seed = kDefaultSeed, unsigned samples = 16);

}  // namespace frobgen
