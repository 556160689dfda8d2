#include "frobgen/symfield.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <unordered_map>

#include "frobgen/error.hpp"
#include "frobgen/fp_poly.hpp"

namespace frobgen::sym {

namespace fp = gf::fp;

namespace {

bool valid_var_name(const std::string& v) {
  if (v.empty() || !std::islower(static_cast<unsigned char>(v[0]))) return false;
  return std::all_of(v.begin(), v.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::uint64_t degree_sum(const Exponents& e) {
  std::uint64_t s = 0;
  for (auto x : e) s += x;
  return s;
}

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b) throw DomainMismatch("ring mismatch: " + a.describe() + " vs " + b.describe());
}

}  // namespace

Ring::Ring(std::uint32_t p, std::vector<std::string> vars) {
  if (!fp::is_prime(p)) throw InvalidArgument("not prime: " + std::to_string(p));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!valid_var_name(vars[i])) throw InvalidArgument("invalid variable name '" + vars[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[j] == vars[i]) throw InvalidArgument("duplicate variable '" + vars[i] + "'");
    }
  }
  data_ = std::make_shared<const Data>(Data{p, std::move(vars)});
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  const auto& v = vars();
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

gf::FieldSpec Ring::base() const { return gf::default_field(p(), 1); }

bool Ring::operator==(const Ring& o) const {
  return data_ == o.data_ || (p() == o.p() && vars() == o.vars());
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << "F_" << p() << "[";
  for (std::size_t i = 0; i < nvars(); ++i) os << (i ? "," : "") << vars()[i];
  os << "]";
  return os.str();
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  const auto da = degree_sum(a);
  const auto db = degree_sum(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly MPoly::constant(const Ring& ring, std::int64_t c) {
  MPoly r(ring);
  const std::uint32_t v = fp::reduce(c, ring.p());
  if (v != 0) r.terms_.push_back(Term{Exponents(ring.nvars(), 0), v});
  return r;
}

MPoly MPoly::variable(const Ring& ring, std::size_t index, std::uint32_t power) {
  if (index >= ring.nvars()) throw InvalidArgument("variable index out of range");
  Exponents e(ring.nvars(), 0);
  e[index] = power;
  return monomial(ring, std::move(e), 1);
}

MPoly MPoly::monomial(const Ring& ring, Exponents exp, std::uint32_t coeff) {
  if (exp.size() != ring.nvars()) throw InvalidArgument("exponent vector has wrong length");
  MPoly r(ring);
  coeff %= ring.p();
  if (coeff != 0) r.terms_.push_back(Term{std::move(exp), coeff});
  return r;
}

MPoly MPoly::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::map<Exponents, std::uint64_t, GrlexGreater> acc;
  const std::uint32_t p = ring.p();
  for (auto& t : terms) {
    if (t.exp.size() != ring.nvars()) throw InvalidArgument("exponent vector has wrong length");
    auto& slot = acc[std::move(t.exp)];
    slot = (slot + t.coeff % p) % p;
  }
  MPoly r(ring);
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.push_back(Term{e, static_cast<std::uint32_t>(c)});
  }
  return r;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && degree_sum(terms_[0].exp) == 0;
}

bool MPoly::is_one() const { return is_constant() && constant_value() == 1; }

std::uint32_t MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  const Term& last = terms_.back();
  return degree_sum(last.exp) == 0 ? last.coeff : 0;
}

const Term& MPoly::leading() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t MPoly::total_degree() const {
  return terms_.empty() ? 0 : static_cast<std::uint32_t>(degree_sum(terms_.front().exp));
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  require_same_ring(ring_, o.ring_);
  const std::uint32_t p = ring_.p();
  MPoly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_greater(terms_[i].exp, o.terms_[j].exp))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || grlex_greater(o.terms_[j].exp, terms_[i].exp)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      const std::uint32_t c = fp::add_mod(terms_[i].coeff, o.terms_[j].coeff, p);
      if (c != 0) r.terms_.push_back(Term{terms_[i].exp, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = ring_.p() - t.coeff;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  require_same_ring(ring_, o.ring_);
  MPoly r(ring_);
  if (is_zero() || o.is_zero()) return r;
  const std::uint32_t p = ring_.p();
  std::map<Exponents, std::uint32_t, GrlexGreater> acc;
  Exponents e(ring_.nvars());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exp[k] + b.exp[k];
      auto& slot = acc[e];
      slot = fp::add_mod(slot, fp::mul_mod(a.coeff, b.coeff, p), p);
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [ex, c] : acc) {
    if (c != 0) r.terms_.push_back(Term{ex, c});
  }
  return r;
}

MPoly MPoly::scale(std::uint32_t c) const {
  c %= ring_.p();
  MPoly r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = fp::mul_mod(t.coeff, c, ring_.p());
  return r;
}

MPoly MPoly::pow(std::uint64_t e) const {
  MPoly result = constant(ring_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::frobenius_power(unsigned e) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ring_.p();
    if (q > UINT32_MAX) throw BudgetExceeded("Frobenius exponent overflows the exponent range");
  }
  MPoly r = *this;
  for (auto& t : r.terms_) {
    for (auto& x : t.exp) {
      const std::uint64_t v = x * q;
      if (v > UINT32_MAX) throw BudgetExceeded("exponent overflow in Frobenius twist");
      x = static_cast<std::uint32_t>(v);
    }
  }
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scale(fp::inv_mod(leading().coeff, ring_.p()));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit_monomial = degree_sum(t.exp) == 0;
    if (unit_monomial) {
      os << t.coeff;
      continue;
    }
    bool need_star = false;
    if (t.coeff != 1) {
      os << t.coeff;
      need_star = true;
    }
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (need_star) os << "*";
      os << ring_.vars()[k];
      if (t.exp[k] > 1) os << "^" << t.exp[k];
      need_star = true;
    }
  }
  return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const Ring& ring = f.ring();
  const std::uint32_t p = ring.p();
  const Term& lg = g.leading();
  const std::uint32_t inv = fp::inv_mod(lg.coeff, p);
  std::vector<Term> quotient;
  MPoly rest = f;
  while (!rest.is_zero()) {
    const Term& lr = rest.leading();
    Exponents e(ring.nvars());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (lr.exp[k] < lg.exp[k]) return std::nullopt;
      e[k] = lr.exp[k] - lg.exp[k];
    }
    const std::uint32_t c = fp::mul_mod(lr.coeff, inv, p);
    quotient.push_back(Term{e, c});
    rest = rest - MPoly::monomial(ring, e, c) * g;
  }
  return MPoly::from_terms(ring, std::move(quotient));
}

std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var) {
  const Ring& ring = f.ring();
  std::vector<std::vector<Term>> buckets(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    Term u = t;
    u.exp[var] = 0;
    buckets[t.exp[var]].push_back(std::move(u));
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MPoly::from_terms(ring, std::move(b)));
  return out;
}

namespace {

// Exponentwise minimum over all terms: the largest monomial dividing f.
Exponents monomial_content(const MPoly& f) {
  Exponents e = f.terms().front().exp;
  for (const auto& t : f.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::min(e[k], t.exp[k]);
  }
  return e;
}

MPoly shift_down(const MPoly& f, const Exponents& e) {
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) {
    for (std::size_t k = 0; k < e.size(); ++k) t.exp[k] -= e[k];
  }
  return MPoly::from_terms(f.ring(), std::move(terms));
}

using UPoly = std::vector<gf::FieldElement>;

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Degree of the monic gcd of two univariate polynomials over a finite field.
std::size_t upoly_gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const gf::FieldElement inv = b.back().inverse();
    while (a.size() >= b.size()) {
      const gf::FieldElement c = a.back() * inv;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Large enough extension of F_p for random evaluation points.
const gf::FieldSpec& evaluation_field(std::uint32_t p) {
  thread_local std::unordered_map<std::uint32_t, gf::FieldSpec> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  unsigned k = 1;
  for (std::uint64_t size = p; size < (1U << 16U); size *= p) ++k;
  return cache.emplace(p, gf::default_field(p, k)).first->second;
}

// True when a random specialization of every variable except var certifies
// that gcd(f, g) has degree 0 in var.
bool coprime_in(const MPoly& f, const MPoly& g, std::size_t var, std::mt19937_64& rng) {
  const gf::FieldSpec& E = evaluation_field(f.ring().p());
  const auto cf = coefficients_in(f, var);
  const auto cg = coefficients_in(g, var);
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<gf::FieldElement> point;
    for (std::size_t k = 0; k < f.ring().nvars(); ++k) point.push_back(gf::random_like(E.zero(), rng));
    UPoly uf;
    UPoly ug;
    for (const auto& c : cf) uf.push_back(evaluate(c, point, E));
    for (const auto& c : cg) ug.push_back(evaluate(c, point, E));
    if (uf.back().is_zero() || ug.back().is_zero()) continue;
    return upoly_gcd_degree(std::move(uf), std::move(ug)) == 0;
  }
  return false;
}

MPoly content_in(const MPoly& f, std::size_t var) {
  MPoly c(f.ring());
  for (const auto& coeff : coefficients_in(f, var)) {
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

MPoly primitive_part(const MPoly& f, std::size_t var) {
  if (f.is_zero()) return f;
  const MPoly c = content_in(f, var);
  auto q = divide_exact(f, c);
  if (!q) throw InternalError("content does not divide polynomial");
  return *q;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const MPoly lb = coefficients_in(b, var).back();
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const std::uint32_t dr = r.degree_in(var);
    const MPoly lr = coefficients_in(r, var).back();
    r = lb * r - lr * MPoly::variable(r.ring(), var, dr - db) * b;
  }
  return r;
}

}  // namespace

MPoly gcd(const MPoly& f, const MPoly& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const Ring& ring = f.ring();
  if (f.is_constant() || g.is_constant()) return MPoly::constant(ring, 1);

  const Exponents mf = monomial_content(f);
  const Exponents mg = monomial_content(g);
  if (degree_sum(mf) + degree_sum(mg) > 0) {
    Exponents m(mf.size());
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(mf[k], mg[k]);
    return MPoly::monomial(ring, m, 1) * gcd(shift_down(f, mf), shift_down(g, mg));
  }
  if (divide_exact(f, g)) return g.monic();
  if (divide_exact(g, f)) return f.monic();

  // A variable can occur in the gcd only if it occurs in both inputs and no
  // evaluation certifies coprimality in it.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (f.terms().size() * 131 + g.terms().size()));
  std::size_t var = ring.nvars();
  for (std::size_t k = 0; k < ring.nvars(); ++k) {
    if (f.degree_in(k) == 0 || g.degree_in(k) == 0) continue;
    if (coprime_in(f, g, k, rng)) continue;
    if (var == ring.nvars() || std::min(f.degree_in(k), g.degree_in(k)) < std::min(f.degree_in(var), g.degree_in(var))) {
      var = k;
    }
  }
  // Every variable of the gcd occurs in both inputs; none survived, so it is constant.
  if (var == ring.nvars()) return MPoly::constant(ring, 1);

  const MPoly cf = content_in(f, var);
  const MPoly cg = content_in(g, var);
  const MPoly c = gcd(cf, cg);
  MPoly a = *divide_exact(f, cf);
  MPoly b = *divide_exact(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero() && b.degree_in(var) > 0) {
    MPoly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r, var);
  }
  if (!b.is_zero()) return c.monic();
  return (c * primitive_part(a, var)).monic();
}

gf::FieldElement evaluate(const MPoly& f, const std::vector<gf::FieldElement>& values, const gf::FieldSpec& target) {
  if (target.p() != f.ring().p()) throw DomainMismatch("characteristic mismatch in evaluation");
  if (values.size() != f.ring().nvars()) throw InvalidArgument("wrong number of evaluation values");
  for (const auto& v : values) {
    if (v.field() != target) throw DomainMismatch("evaluation value outside " + target.literal());
  }
  std::vector<std::unordered_map<std::uint32_t, gf::FieldElement>> cache(values.size());
  auto power = [&](std::size_t k, std::uint32_t e) -> gf::FieldElement {
    auto it = cache[k].find(e);
    if (it != cache[k].end()) return it->second;
    gf::FieldElement v = values[k].pow(e);
    cache[k].emplace(e, v);
    return v;
  };
  gf::FieldElement acc = target.zero();
  for (const auto& t : f.terms()) {
    gf::FieldElement m = target.from_int(t.coeff);
    for (std::size_t k = 0; k < t.exp.size() && !m.is_zero(); ++k) {
      if (t.exp[k] != 0) m *= power(k, t.exp[k]);
    }
    acc += m;
  }
  return acc;
}

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.ring(), 1)) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_ring(num_.ring(), den_.ring());
  const Ring& ring = num_.ring();
  const std::uint32_t p = ring.p();
  if (den_.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (num_.is_zero()) {
    den_ = MPoly::constant(ring, 1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scale(fp::inv_mod(den_.constant_value(), p));
    den_ = MPoly::constant(ring, 1);
    return;
  }
  if (auto q = divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = MPoly::constant(ring, 1);
    return;
  }
  const MPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const std::uint32_t inv = fp::inv_mod(den_.leading().coeff, p);
  num_ = num_.scale(inv);
  den_ = den_.scale(inv);
}

RatFunc RatFunc::constant(const Ring& ring, std::int64_t c) { return RatFunc(MPoly::constant(ring, c)); }

RatFunc RatFunc::variable(const Ring& ring, const std::string& name) {
  auto idx = ring.index_of(name);
  if (!idx) throw InvalidArgument("unknown variable '" + name + "' in " + ring.describe());
  return RatFunc(MPoly::variable(ring, *idx));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) {
    if (den_.is_one()) return RatFunc(num_ + o.num_);
    return RatFunc(num_ + o.num_, den_);
  }
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return zero_like();
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw InvalidArgument("division by the zero polynomial");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(std::uint64_t e) const {
  RatFunc r = *this;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  // Powers of coprime polynomials stay coprime; the monic denominator stays monic.
  return r;
}

RatFunc RatFunc::frobenius_power(unsigned e) const {
  RatFunc r = *this;
  r.num_ = num_.frobenius_power(e);
  r.den_ = den_.frobenius_power(e);
  return r;
}

std::string RatFunc::to_string() const {
  const std::string n = num_.to_string();
  if (den_.is_one()) return n;
  const bool num_simple = num_.terms().size() == 1;
  std::string out = num_simple ? n : "(" + n + ")";
  const auto& dt = den_.terms();
  bool den_simple = false;
  if (dt.size() == 1 && dt[0].coeff == 1) {
    std::size_t nz = 0;
    for (auto x : dt[0].exp) nz += x != 0 ? 1 : 0;
    den_simple = nz == 1;
  }
  out += "/";
  out += den_simple ? den_.to_string() : "(" + den_.to_string() + ")";
  return out;
}

bool equal_by_cross_multiplication(const RatFunc& a, const RatFunc& b) {
  return a.num() * b.den() == b.num() * a.den();
}

gf::FieldElement specialize(const RatFunc& f, const Assignment& xi, const gf::FieldSpec& target) {
  const Ring& ring = f.ring();
  std::vector<gf::FieldElement> values;
  values.reserve(ring.nvars());
  for (std::size_t k = 0; k < ring.nvars(); ++k) {
    const std::string& name = ring.vars()[k];
    auto it = xi.find(name);
    const bool used = f.num().degree_in(k) > 0 || f.den().degree_in(k) > 0;
    if (it == xi.end()) {
      if (used) throw InvalidArgument("no value assigned to variable '" + name + "'");
      values.push_back(target.zero());
    } else {
      values.push_back(it->second);
    }
  }
  const gf::FieldElement d = evaluate(f.den(), values, target);
  if (d.is_zero()) throw DenominatorVanishes("denominator " + f.den().to_string() + " vanishes at the specialization point");
  return evaluate(f.num(), values, target) / d;
}

RatFunc substitute(const RatFunc& f, const std::vector<RatFunc>& images) {
  if (images.size() != f.ring().nvars()) throw InvalidArgument("substitution needs one image per variable");
  if (images.empty()) throw InvalidArgument("cannot substitute into a ring without variables");
  const Ring& target = images[0].ring();
  auto eval_poly = [&](const MPoly& g) {
    RatFunc acc(target);
    for (const auto& t : g.terms()) {
      RatFunc m = RatFunc::constant(target, t.coeff);
      for (std::size_t k = 0; k < t.exp.size(); ++k) {
        if (t.exp[k] != 0) m *= images[k].pow(t.exp[k]);
      }
      acc += m;
    }
    return acc;
  };
  return eval_poly(f.num()) / eval_poly(f.den());
}

RatFunc extend_ring(const RatFunc& f, const Ring& bigger) {
  if (bigger.p() != f.ring().p()) throw DomainMismatch("characteristic mismatch when extending ring");
  std::vector<std::size_t> where;
  for (const auto& v : f.ring().vars()) {
    auto idx = bigger.index_of(v);
    if (!idx) throw DomainMismatch("variable '" + v + "' missing from " + bigger.describe());
    where.push_back(*idx);
  }
  auto lift = [&](const MPoly& g) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Exponents e(bigger.nvars(), 0);
      for (std::size_t k = 0; k < where.size(); ++k) e[where[k]] = t.exp[k];
      terms.push_back(Term{std::move(e), t.coeff});
    }
    return MPoly::from_terms(bigger, std::move(terms));
  };
  return RatFunc(lift(f.num()), lift(f.den()));
}

std::uint32_t characteristic(const RatFunc& f) { return f.ring().p(); }

RatFunc random_like(const RatFunc& proto, std::mt19937_64& rng) {
  const Ring& ring = proto.ring();
  MPoly acc = MPoly::constant(ring, static_cast<std::int64_t>(rng() % ring.p()));
  for (std::size_t k = 0; k < ring.nvars(); ++k) {
    acc = acc + MPoly::variable(ring, k).scale(static_cast<std::uint32_t>(rng() % ring.p()));
  }
  return RatFunc(acc);
}

MPoly random_poly(const Ring& ring, std::mt19937_64& rng, unsigned max_degree, unsigned max_terms) {
  const unsigned count = max_terms == 0 ? 0 : static_cast<unsigned>(rng() % (max_terms + 1));
  std::vector<Term> terms;
  for (unsigned i = 0; i < count; ++i) {
    Exponents e(ring.nvars(), 0);
    unsigned budget = max_degree == 0 ? 0 : static_cast<unsigned>(rng() % (max_degree + 1));
    for (std::size_t k = 0; k < e.size() && budget > 0; ++k) {
      const auto x = static_cast<std::uint32_t>(rng() % (budget + 1));
      e[k] = x;
      budget -= x;
    }
    if (!e.empty() && budget > 0) e[rng() % e.size()] += budget;
    terms.push_back(Term{std::move(e), static_cast<std::uint32_t>(rng() % ring.p())});
  }
  return MPoly::from_terms(ring, std::move(terms));
}

}  // namespace frobgen::sym
