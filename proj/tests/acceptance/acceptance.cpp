// Acceptance run: one PASS/FAIL line per criterion. All checks are exact;
// the only tolerances are the wall-clock limits below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frobgen/error.hpp"
#include "frobgen/galois.hpp"
#include "frobgen/generators.hpp"
#include "support.hpp"

using namespace frobgen;
namespace tst = frobgen::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

const sym::Ring& st5() {
  static const sym::Ring r(5, {"s", "t"});
  return r;
}

const char* const kPrintedA3 = "[[s^3 + s*t^2, s^2*t + 4*t^3]; [3*s^2*t + 2*t^3, s^3 + s*t^2]]";
const char* const kPrintedN = "[[1, s^3 + s*t^2]; [0, 3*s^2*t + 2*t^3]]";
const char* const kPrintedB =
    "[[0, 4*s^14*t^4 + 3*s^10*t^8 + s^8*t^10 + s^6*t^12 + 2*s^4*t^14 + s^2*t^16 + 3*t^18];"
    " [1, s^15 + s^11*t^4 + 2*s^9*t^6 + 2*s^7*t^8 + 3*s^5*t^10 + 2*s^3*t^12 + s*t^14]]";

BigInt big_pow(std::uint32_t p, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

unsigned trailing_zeros(BigInt a) {
  unsigned v = 0;
  while (a % 2 == 0) {
    a /= 2;
    ++v;
  }
  return v;
}

Outcome bit_exact_c8() {
  const auto res = cyclic2_generic_poly(5, 3);
  const auto printed = parse_linearized(c8f5_printed_polynomial(), st5(), FrobeniusQ{1});
  std::size_t monomials = 0;
  std::size_t matched = 0;
  for (std::size_t i = 0; i < printed.coeffs().size(); ++i) {
    const auto& want = printed.coeffs()[i];
    if (want.is_zero()) continue;
    const auto& got = res.f->coeffs()[i];
    for (const auto& t : want.num().terms()) {
      ++monomials;
      for (const auto& u : got.num().terms()) matched += (t == u && got.den().is_one()) ? 1 : 0;
    }
  }
  const bool text = res.polynomial == c8f5_printed_polynomial();
  const bool same = *res.f == printed && res.f->coeffs().size() == printed.coeffs().size();
  const bool a3 = *res.Ad == parse_matrix(kPrintedA3, st5());
  const bool n = res.companion->N == parse_matrix(kPrintedN, st5());
  const bool b = res.companion->B == parse_matrix(kPrintedB, st5());
  std::ostringstream d;
  d << matched << "/" << monomials << " monomials, text " << (text ? "equal" : "differs") << ", A^3 "
    << (a3 ? "ok" : "differs") << ", N " << (n ? "ok" : "differs") << ", B " << (b ? "ok" : "differs");
  return {text && same && monomials == 15 && matched == 15 && a3 && n && b, d.str()};
}

Outcome factorization() {
  const auto printed = parse_linearized(c8f5_printed_polynomial(), st5(), FrobeniusQ{1});
  const bool ok = verify_factorization(printed, c8f5_printed_factors());
  return {ok, ok ? "Y * three factors == f" : "product differs from f"};
}

Outcome genericity_c8() {
  const auto res = cyclic2_generic_poly(5, 3);
  const auto module = FrobModule<sym::RatFunc>::make(*res.Ad, FrobeniusQ{1});
  const auto f5 = gf::default_field(5, 1);
  unsigned valid = 0;
  unsigned with_basis = 0;
  unsigned bad = 0;
  unsigned max_order = 0;
  std::set<unsigned> seen;
  for (std::int64_t s = 0; s < 5; ++s) {
    for (std::int64_t t = 0; t < 5; ++t) {
      const sym::Assignment xi{{"s", f5.from_int(s)}, {"t", f5.from_int(t)}};
      try {
        const auto m = specialize_module(module, xi, f5);
        ++valid;
        const auto g = galois_order_of_specialization(m, 8);
        if (8 % g.splitting_degree != 0 || g.rho_order != g.splitting_degree) ++bad;
        // The polynomial only specializes faithfully where the cyclic basis stays invertible.
        if (!det(specialize_matrix(res.companion->N, xi, f5)).is_zero()) {
          ++with_basis;
          if (splitting_degree(specialize(*res.f, xi, f5), 2, 8) != g.splitting_degree) ++bad;
        }
        seen.insert(g.splitting_degree);
        max_order = std::max(max_order, g.splitting_degree);
      } catch (const SingularMatrix&) {
      }
    }
  }
  std::ostringstream d;
  d << valid << " valid points (" << with_basis << " with invertible N), orders {";
  for (auto it = seen.begin(); it != seen.end(); ++it) d << (it == seen.begin() ? "" : ",") << *it;
  d << "}, " << bad << " inconsistent";
  return {valid > 0 && bad == 0 && max_order == 8, d.str()};
}

Outcome q8_lambda_star() {
  const auto param = q8_param();
  const auto computed = lambda_star_generators(param, FrobeniusQ{1});
  const sym::Ring& r = param.ring();
  const auto& printed = q8_printed_triple();
  std::ostringstream d;
  bool all = computed.size() == printed.size();
  for (std::size_t i = 0; all && i < printed.size(); ++i) {
    const auto want = sym::parse_expr(printed[i], r);
    const bool eq = computed[i] == want;
    all = all && eq;
    if (!eq) d << "u_" << i + 1 << ": computed " << computed[i].to_string() << " vs printed " << want.to_string();
  }
  if (all) d << "all three coordinates equal";
  return {all, d.str()};
}

Outcome q8_specializations() {
  const auto report = q8_reproduction();
  std::size_t disagree = 0;
  std::size_t eliminant_disagree = 0;
  std::size_t invariant_bad = 0;
  for (const auto& pt : report.points) {
    if (!pt.agrees()) ++disagree;
    if (!pt.eliminant_agrees()) ++eliminant_disagree;
    if (8 % pt.system_degree != 0 || !pt.rho_in_q8 || !pt.rho_order_matches) ++invariant_bad;
  }
  std::ostringstream d;
  d << report.points.size() << " points; printed f disagrees at " << disagree << ", system/image invariants fail at "
    << invariant_bad << ", x_1-eliminant disagrees at " << eliminant_disagree;
  return {report.points.size() >= 20 && report.all_points_agree(), d.str()};
}

Outcome sln_routes() {
  std::ostringstream d;
  bool ok = true;
  for (auto [q, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}, {5, 2}}) {
    const bool eq = sln_closed_form(q, n) == sln_elimination_chain(q, n);
    ok = ok && eq;
    d << "(" << q << "," << n << ")" << (eq ? "=" : "!=") << " ";
  }
  return {ok, d.str()};
}

// Every fiber of lambda on G(F_{q^m}) must be a coset U G(F_q): its size is
// |G(F_q)| and U^{-1} V is Frobenius-fixed for all V in it.
bool fibers_are_cosets(const GroupParam& param, const gf::FieldSpec& base, unsigned m, std::size_t rational,
                       std::size_t& fibers, std::size_t& points) {
  const auto L = m == 1 ? base : extension_of(base, m);
  bool ok = true;
  for (const auto& [key, fiber] : lambda_fibers(param, L, FrobeniusQ{1})) {
    ++fibers;
    points += fiber.size();
    if (fiber.size() != rational) ok = false;
    const auto u_inv = inverse(fiber.front());
    for (const auto& v : fiber) {
      const auto g = u_inv * v;
      if (!is_frobenius_fixed(g, FrobeniusQ{base.k()}) || !param.is_member(g)) ok = false;
    }
  }
  return ok;
}

Outcome fiber_counts() {
  const auto torus = torus_param(weil_restriction(5, 2));
  const auto q8 = q8_param();
  std::ostringstream d;
  bool ok = true;
  for (const auto& [param, base, rational, m_max] :
       std::vector<std::tuple<GroupParam, gf::FieldSpec, std::size_t, unsigned>>{
           {torus, gf::default_field(5, 1), 24, 4}, {q8, gf::default_field(2, 1), 8, 4}}) {
    if (group_points(param, base).size() != rational) ok = false;
    for (unsigned m = 1; m <= m_max; ++m) {
      std::size_t fibers = 0;
      std::size_t points = 0;
      ok = fibers_are_cosets(param, base, m, rational, fibers, points) && ok;
      if (m == m_max) d << param.name() << " m=" << m << ": " << fibers << " fibers of " << points << " points; ";
    }
  }
  return {ok, d.str()};
}

Outcome valuation_sweep() {
  static const std::vector<std::uint32_t> primes{3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  unsigned lemma = 0;
  unsigned dichotomy = 0;
  unsigned bad = 0;
  for (std::uint32_t p : primes) {
    const unsigned base = trailing_zeros(big_pow(p, 2) - 1);
    for (unsigned k = 1; k <= 6; ++k) {
      ++lemma;
      const BigInt x = big_pow(p, 1U << k) - 1;
      if (trailing_zeros(x) != base + k - 1 || v2(x) != base + k - 1) ++bad;
    }
    for (unsigned m = 1; m <= 6; ++m) {
      ++dichotomy;
      const std::uint64_t mod = std::uint64_t{1} << m;
      const auto plan = cyclic2_plan(p, m);
      if (p % mod == 1) {
        bad += plan.kind == Cyclic2Case::kKummer ? 0 : 1;
        continue;
      }
      if (p % mod == mod - 1) {
        bad += plan.kind == Cyclic2Case::kMinusOne ? 0 : 1;
        continue;
      }
      if (plan.kind != Cyclic2Case::kTorus) {
        ++bad;
        continue;
      }
      unsigned n = 1;
      while ((big_pow(p, n) - 1) % mod != 0) ++n;
      const BigInt pn1 = big_pow(p, n) - 1;
      if (n != plan.n || plan.d * mod != pn1 || pn1 % (2 * mod) == 0) ++bad;
    }
  }
  std::ostringstream d;
  d << lemma << " lemma cases, " << dichotomy << " dichotomy cases, " << bad << " failures";
  return {bad == 0, d.str()};
}

Outcome weil_laws() {
  std::ostringstream d;
  bool ok = true;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {5, 2}, {7, 2}, {3, 3}}) {
    const auto spec = weil_restriction(p, n);
    const auto el = gf::enumerate(spec.field);
    std::vector<FiniteMatrix> reps;
    reps.reserve(el.size());
    for (const auto& z : el) reps.push_back(regular_rep(spec, z));
    std::size_t bad = 0;
    std::size_t pairs = 0;
    std::size_t members = 0;
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (det(reps[i]) != gf::norm(el[i])) ++bad;
      if (!el[i].is_zero() && torus_member(spec, reps[i])) ++members;
      for (std::size_t j = 0; j < el.size(); ++j, ++pairs) {
        if (regular_rep(spec, el[i] * el[j]) != reps[i] * reps[j]) ++bad;
      }
    }
    const auto info = order_and_cyclicity(spec);
    const std::uint64_t want = el.size() - 1;
    const bool gen_ok = info.generator && tst::naive_order(torus_element(spec, info.generator->column(0))) == want;
    const bool this_ok = bad == 0 && members == want && info.order == want && info.cyclic && gen_ok;
    ok = ok && this_ok;
    d << "(" << p << "," << n << "): " << pairs << " pairs, |T|=" << info.order << (this_ok ? "" : " FAILED") << "; ";
  }
  return {ok, d.str()};
}

Outcome equivalence_invariance() {
  std::mt19937_64 rng(tst::kSeed + 10);
  const std::vector<std::uint32_t> qs{2, 3, 5};
  int cases = 0;
  int rejected = 0;
  int bad = 0;
  std::set<unsigned> degrees;
  while (cases < 50) {
    const std::uint32_t q = qs[rng() % qs.size()];
    const std::size_t n = 1 + rng() % 3;
    const unsigned k = 1 + static_cast<unsigned>(rng() % 2);
    const auto F = gf::default_field(q, k);
    const auto a = tst::invertible_matrix(F, n, rng);
    const auto m = FiniteModule::make(a, FrobeniusQ{1});
    unsigned da = 0;
    try {
      da = module_splitting_degree(m, kSplittingDegreeCeiling);
    } catch (const BudgetExceeded&) {
      ++rejected;
      continue;
    }
    ++cases;
    const auto u = tst::invertible_matrix(F, n, rng);
    const auto b = frobenius_conjugate(a, u, FrobeniusQ{1});
    unsigned db = 0;
    try {
      db = module_splitting_degree(FiniteModule::make(b, FrobeniusQ{1}), kSplittingDegreeCeiling);
    } catch (const BudgetExceeded&) {
    }
    // Over F_q itself the splitting degree is the order of A.
    const bool oracle = k != 1 || matrix_order(a) == da;
    if (da != db || !oracle || b != inverse(u) * a * frob_twist(u, FrobeniusQ{1})) ++bad;
    degrees.insert(da);
  }
  std::ostringstream d;
  d << cases << " modules, " << bad << " mismatches, " << rejected << " resampled (degree > "
    << kSplittingDegreeCeiling << "), " << degrees.size() << " distinct degrees up to " << *degrees.rbegin();
  return {bad == 0, d.str()};
}

// Property suites; each counter is a number of generated cases.
Outcome property_suites() {
  std::mt19937_64 rng(tst::kSeed + 11);
  std::ostringstream d;
  bool ok = true;
  auto report = [&](const std::string& name, int cases, int failures) {
    ok = ok && failures == 0 && cases >= 100;
    d << name << " " << cases - failures << "/" << cases << "; ";
  };

  int cases = 0;
  int failures = 0;
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 1}, {2, 3}, {5, 1}}) {
    const auto f = gf::default_field(p, k);
    const auto el = gf::enumerate(f);
    for (const auto& a : el) {
      for (const auto& b : el) {
        for (const auto& c : el) {
          ++cases;
          const bool good = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) &&
                            (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                            (a.is_zero() || a * a.inverse() == f.one());
          failures += good ? 0 : 1;
        }
      }
    }
  }
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{7, 2}, {2, 8}, {3, 5}, {101, 3}}) {
    const auto f = gf::default_field(p, k);
    for (int i = 0; i < tst::kCases; ++i, ++cases) {
      const auto a = tst::any_element(f, rng);
      const auto b = tst::any_element(f, rng);
      const auto c = tst::any_element(f, rng);
      const bool good = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && (a.is_zero() || (b / a) * a == b);
      failures += good ? 0 : 1;
    }
  }
  report("field axioms", cases, failures);

  cases = 0;
  failures = 0;
  const std::vector<gf::FieldSpec> fields{gf::default_field(2, 4), gf::default_field(3, 2), gf::default_field(5, 3)};
  for (int i = 0; i < tst::kCases; ++i, ++cases) {
    const auto& f = fields[i % fields.size()];
    const std::size_t n = 1 + i % 4;
    const FrobeniusQ q{1U + static_cast<unsigned>(i % 2)};
    const auto m = FiniteModule::make(tst::invertible_matrix(f, n, rng), q);
    const auto c = tst::any_element(f, rng);
    std::vector<gf::FieldElement> v;
    std::vector<gf::FieldElement> w;
    std::vector<gf::FieldElement> cvw;
    for (std::size_t j = 0; j < n; ++j) {
      v.push_back(tst::any_element(f, rng));
      w.push_back(tst::any_element(f, rng));
      cvw.push_back(c * v.back() + w.back());
    }
    const auto lhs = m.apply_phi(cvw);
    const auto pv = m.apply_phi(v);
    const auto pw = m.apply_phi(w);
    const auto cq = c.frobenius_power(q.exponent);
    bool good = true;
    for (std::size_t j = 0; j < n; ++j) good = good && lhs[j] == cq * pv[j] + pw[j];
    failures += good ? 0 : 1;
  }
  report("semilinearity", cases, failures);

  cases = 0;
  failures = 0;
  const std::vector<gf::FieldSpec> twist_fields{gf::default_field(2, 3), gf::default_field(3, 2),
                                                gf::default_field(5, 2), gf::default_field(7, 3)};
  for (int i = 0; i < tst::kCases; ++i, ++cases) {
    const auto& f = twist_fields[i % twist_fields.size()];
    const std::size_t n = 1 + i % 4;
    const FrobeniusQ q{1U + static_cast<unsigned>(i % 2)};
    const auto a = tst::invertible_matrix(f, n, rng);
    const auto b = tst::invertible_matrix(f, n, rng);
    const bool good = frob_twist(a * b, q) == frob_twist(a, q) * frob_twist(b, q) &&
                      frob_twist(inverse(a), q) == inverse(frob_twist(a, q)) &&
                      lang_steinberg_image(a * b, q) ==
                          a * lang_steinberg_image(b, q) * inverse(a) * lang_steinberg_image(a, q);
    failures += good ? 0 : 1;
  }
  report("twist laws", cases, failures);

  cases = 0;
  failures = 0;
  const std::vector<sym::Ring> rings{sym::Ring(5, {"s", "t"}), sym::Ring(2, {"t_1", "t_2", "t_3"}),
                                     sym::Ring(11, {"x"})};
  for (int i = 0; i < tst::kCases; ++i, ++cases) {
    const sym::Ring& ring = rings[i % rings.size()];
    const auto f = tst::any_ratfunc(ring, rng, 4);
    const auto text = f.to_string();
    const auto g = sym::parse_expr(text, ring);
    failures += (g == f && g.to_string() == text) ? 0 : 1;
  }
  for (int i = 0; i < tst::kCases; ++i, ++cases) {
    SymMatrix a(2, 2, sym::RatFunc(st5()));
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) a(r, c) = tst::any_polynomial(st5(), rng, 3);
    }
    failures += parse_matrix(a.to_string(), st5()) == a ? 0 : 1;
  }
  report("parser round trip", cases, failures);
  return {ok, d.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "C_8/F_5 polynomial and matrices bit-exact", 5, bit_exact_c8},
      {2, "factorization identity", 1, factorization},
      {3, "C_8/F_5 specialization genericity", 30, genericity_c8},
      {4, "Q_8 lambda* triple", 1, q8_lambda_star},
      {5, "Q_8 specializations against printed f", 60, q8_specializations},
      {6, "SL_n closed form equals elimination chain", 10, sln_routes},
      {7, "Lang-Steinberg fibers are cosets", 60, fiber_counts},
      {8, "2-adic valuation sweep", 5, valuation_sweep},
      {9, "Weil restriction laws", 30, weil_laws},
      {10, "equivalence invariance", 60, equivalence_invariance},
      {11, "property suites", 120, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << timing
              << (in_time ? "" : ", over time") << "] " << o.detail << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
