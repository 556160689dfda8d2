#include <sstream>

#include "frobgen/fp_poly.hpp"
#include "frobgen/generators.hpp"

namespace frobgen {

unsigned v2(std::uint64_t a) {
  if (a < 1) throw InvalidArgument("v2 needs a positive integer");
  unsigned v = 0;
  while ((a & 1U) == 0) {
    a >>= 1U;
    ++v;
  }
  return v;
}

unsigned v2(const BigInt& a) {
  if (a < 1) throw InvalidArgument("v2 needs a positive integer");
  return static_cast<unsigned>(boost::multiprecision::lsb(a));
}

unsigned v2_power_minus_one(std::uint64_t p, std::uint64_t N) {
  if (p % 2 == 0) throw InvalidArgument("v2_power_minus_one needs an odd base");
  if (N < 1) throw InvalidArgument("exponent must be positive");
  // Unsigned arithmetic wraps modulo 2^64, which preserves valuations below 64.
  std::uint64_t r = 1;
  std::uint64_t b = p;
  std::uint64_t e = N;
  while (e > 0) {
    if (e & 1U) r *= b;
    b *= b;
    e >>= 1U;
  }
  const std::uint64_t x = r - 1;
  if (x == 0) throw BudgetExceeded("valuation of p^N - 1 is at least 64");
  return v2(x);
}

std::uint64_t order_mod_pow2(std::uint64_t p, unsigned m) {
  if (p % 2 == 0) throw InvalidArgument("order modulo 2^m needs an odd number");
  if (m < 1 || m > 62) throw InvalidArgument("m must lie in [1, 62]");
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  // The unit group modulo 2^m is a 2-group, so the order is a power of two.
  std::uint64_t x = p & mask;
  std::uint64_t order = 1;
  while (x != 1) {
    x = (x * x) & mask;
    order *= 2;
  }
  return order;
}

std::string to_string(Cyclic2Case c) {
  switch (c) {
    case Cyclic2Case::kKummer:
      return "kummer";
    case Cyclic2Case::kMinusOne:
      return "minus-one";
    case Cyclic2Case::kTorus:
      return "torus";
  }
  return "unknown";
}

Cyclic2Plan cyclic2_plan(std::int64_t p, unsigned m) {
  if (p < 3 || p > INT32_MAX || !gf::fp::is_prime(static_cast<std::uint64_t>(p))) {
    throw InvalidArgument("p must be an odd prime, got " + std::to_string(p));
  }
  if (m < 1 || m > 62) throw InvalidArgument("m must lie in [1, 62], got " + std::to_string(m));
  Cyclic2Plan plan;
  plan.p = static_cast<std::uint32_t>(p);
  plan.m = m;
  const std::uint64_t modulus = std::uint64_t{1} << m;
  const std::uint64_t r = static_cast<std::uint64_t>(p) % modulus;
  if (r == 1 % modulus) {
    plan.kind = Cyclic2Case::kKummer;
    return plan;
  }
  if (r == modulus - 1) {
    plan.kind = Cyclic2Case::kMinusOne;
    return plan;
  }
  plan.kind = Cyclic2Case::kTorus;
  const std::uint64_t n = order_mod_pow2(static_cast<std::uint64_t>(p), m);
  plan.n = static_cast<unsigned>(n);
  const BigInt pn = boost::multiprecision::pow(BigInt(p), plan.n);
  const BigInt num = pn - 1;
  if (v2(num) != m) throw InternalError("2^m does not exactly divide p^n - 1");
  plan.d = num >> m;
  return plan;
}

namespace {

std::string modulus_text(const gf::FieldSpec& f) {
  const sym::Ring x(f.p(), {"x"});
  std::vector<sym::Term> terms;
  for (std::size_t i = 0; i < f.modulus().size(); ++i) {
    terms.push_back(sym::Term{{static_cast<std::uint32_t>(i)}, f.modulus()[i]});
  }
  return sym::MPoly::from_terms(x, std::move(terms)).to_string();
}

std::string basis_text(unsigned n) {
  std::ostringstream os;
  os << "1";
  for (unsigned i = 1; i < n; ++i) {
    os << ", g";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string vector_text(const std::vector<sym::RatFunc>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  os << "]";
  return os.str();
}

}  // namespace

Cyclic2Result cyclic2_generic_poly(std::int64_t p, unsigned m, std::uint64_t seed, std::uint64_t term_budget) {
  Cyclic2Result res;
  res.plan = cyclic2_plan(p, m);
  res.meta.seed = seed;
  const Cyclic2Plan& plan = res.plan;
  if (plan.kind == Cyclic2Case::kMinusOne) {
    throw ExistenceOnly("p = " + std::to_string(plan.p) + " is -1 mod 2^" + std::to_string(m) +
                        ": a generic polynomial exists because the fixed field of the regular representation is "
                        "rational, but no explicit construction is available");
  }
  if (plan.kind == Cyclic2Case::kKummer) {
    res.polynomial = "Y^" + std::to_string(std::uint64_t{1} << m) + " - t";
    res.parameters = {"t"};
    res.meta.field = gf::default_field(plan.p, 1).literal();
    return res;
  }

  // Coefficient degree D = d * (p^n - 1) / (p - 1); count monomials C(D + n - 1, n - 1).
  const BigInt degree = plan.d * ((boost::multiprecision::pow(BigInt(plan.p), plan.n) - 1) / (plan.p - 1));
  BigInt terms = 1;
  for (unsigned i = 1; i < plan.n && terms <= term_budget; ++i) terms = terms * (degree + i) / i;
  if (terms > term_budget) {
    throw BudgetExceeded("torus pipeline for p = " + std::to_string(plan.p) + ", m = " + std::to_string(m) +
                         " needs coefficients of degree about " + degree.str() + " in " + std::to_string(plan.n) +
                         " variables (budget " + std::to_string(term_budget) + " monomials)");
  }
  const bool c8f5_case = plan.p == 5 && m == 3;
  std::optional<std::vector<std::int64_t>> modulus;
  if (c8f5_case) modulus = std::vector<std::int64_t>{3, 0, 1};
  std::vector<std::string> vars = plan.n == 2 ? std::vector<std::string>{"s", "t"} : default_torus_vars(plan.n);
  if (plan.n != 2) {
    for (unsigned i = 0; i < plan.n; ++i) vars[i] = "t_" + std::to_string(i + 1);
  }
  res.torus = weil_restriction(plan.p, plan.n, modulus, vars);
  res.parameters = vars;
  res.A = res.torus->general_matrix;
  res.Ad = pow(*res.A, static_cast<std::uint64_t>(plan.d));
  unsigned deg = 0;
  for (std::size_t i = 0; i < res.Ad->rows(); ++i) {
    for (std::size_t j = 0; j < res.Ad->cols(); ++j) deg = std::max(deg, (*res.Ad)(i, j).num().total_degree());
  }
  const auto module = FrobModule<sym::RatFunc>::make(*res.Ad, FrobeniusQ{1});
  if (c8f5_case) {
    std::vector<sym::RatFunc> e1(plan.n, sym::RatFunc(res.torus->ring));
    e1[0] = sym::RatFunc::constant(res.torus->ring, 1);
    res.companion = companion_from_vector(module, e1, "e_1", seed);
  } else {
    res.companion = cyclic_basis(module, seed);
  }
  res.f = extract_generic_polynomial(*res.companion, FrobeniusQ{1});
  res.polynomial = res.f->to_string();
  res.meta.field = res.torus->field.literal();
  res.meta.modulus = modulus_text(res.torus->field);
  res.meta.basis = basis_text(plan.n);
  res.meta.cyclic_vector = res.companion->vector_label + " = " + vector_text(res.companion->cyclic_vector);
  res.meta.d = plan.d.str();
  res.meta.power_entry_degree = deg;
  return res;
}

}  // namespace frobgen
