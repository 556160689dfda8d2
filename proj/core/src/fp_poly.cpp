#include "frobgen/fp_poly.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "frobgen/error.hpp"

namespace frobgen::gf::fp {

std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  std::uint32_t base = a % p;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t a = i < f.size() ? f[i] : 0;
    std::uint32_t b = i < g.size() ? g[i] : 0;
    r[i] = add_mod(a, b, p);
  }
  trim(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t a = i < f.size() ? f[i] : 0;
    std::uint32_t b = i < g.size() ? g[i] : 0;
    r[i] = sub_mod(a, b, p);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint32_t p) {
  if (f.empty() || g.empty()) return {};
  std::vector<std::uint64_t> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{f[i]} * g[j]) % p;
    }
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
  trim(r);
  return r;
}

Poly scale(const Poly& f, std::uint32_t c, std::uint32_t p) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul_mod(f[i], c, p);
  trim(r);
  return r;
}

void divmod(const Poly& f, const Poly& g, std::uint32_t p, Poly& q, Poly& r) {
  if (g.empty()) throw InvalidArgument("polynomial division by zero");
  r = f;
  trim(r);
  const int dg = degree(g);
  if (degree(r) < dg) {
    q.clear();
    return;
  }
  q.assign(static_cast<std::size_t>(degree(r) - dg + 1), 0);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (degree(r) >= dg) {
    const int shift = degree(r) - dg;
    const std::uint32_t c = mul_mod(r.back(), lead_inv, p);
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= dg; ++i) {
      auto idx = static_cast<std::size_t>(i + shift);
      r[idx] = sub_mod(r[idx], mul_mod(c, g[static_cast<std::size_t>(i)], p), p);
    }
    trim(r);
  }
}

Poly rem(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly q, r;
  divmod(f, g, p, q, r);
  return r;
}

Poly make_monic(const Poly& f, std::uint32_t p) {
  if (f.empty()) return f;
  return scale(f, inv_mod(f.back(), p), p);
}

Poly gcd(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly a = f, b = g;
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& m, std::uint32_t p) {
  return rem(mul(f, g, p), m, p);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result = rem(Poly{1}, m, p);
  Poly b = rem(base, m, p);
  while (e > 0) {
    if (e & 1U) result = mulmod(result, b, m, p);
    e >>= 1U;
    if (e > 0) b = mulmod(b, b, m, p);
  }
  return result;
}

Poly invmod(const Poly& f, const Poly& m, std::uint32_t p) {
  // Extended Euclid tracking only the coefficient of f.
  Poly r0 = m, r1 = rem(f, m, p);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) throw InvalidArgument("polynomial is not invertible modulo the modulus");
  return rem(scale(s0, inv_mod(r0[0], p), p), m, p);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  Poly xp = x;  // x^{p^i} mod f
  for (int i = 1; i <= n / 2; ++i) {
    xp = powmod(xp, p, f, p);
    if (degree(gcd(sub(xp, x, p), f, p)) > 0) return false;
  }
  return true;
}

}  // namespace frobgen::gf::fp
