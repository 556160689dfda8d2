// Dense univariate polynomials over a prime field F_p.
//
// Coefficients are stored low degree first with no trailing zeros; the zero
// polynomial is the empty vector. Used for field moduli, irreducibility tests
// and inverses in F_{p^k}.
#pragma once

#include <cstdint>
#include <vector>

namespace frobgen::gf::fp {

using Poly = std::vector<std::uint32_t>;

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// a must be nonzero mod p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(std::int64_t v, std::uint32_t p);

bool is_prime(std::uint64_t n);

void trim(Poly& f);
/// -1 for the zero polynomial.
int degree(const Poly& f);

Poly add(const Poly& f, const Poly& g, std::uint32_t p);
Poly sub(const Poly& f, const Poly& g, std::uint32_t p);
Poly mul(const Poly& f, const Poly& g, std::uint32_t p);
Poly scale(const Poly& f, std::uint32_t c, std::uint32_t p);
/// Remainder of f modulo a nonzero g.
Poly rem(const Poly& f, const Poly& g, std::uint32_t p);
/// Quotient and remainder; g nonzero.
void divmod(const Poly& f, const Poly& g, std::uint32_t p, Poly& q, Poly& r);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& f, const Poly& g, std::uint32_t p);
Poly make_monic(const Poly& f, std::uint32_t p);
Poly mulmod(const Poly& f, const Poly& g, const Poly& m, std::uint32_t p);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p);
/// Inverse of f modulo m, assuming gcd(f, m) = 1.
Poly invmod(const Poly& f, const Poly& m, std::uint32_t p);

/// Irreducibility of a monic f of degree >= 1: gcd(x^{p^i} - x, f) = 1 for i <= deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p);

}  // namespace frobgen::gf::fp
