#include "frobgen/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "frobgen/error.hpp"
#include "frobgen/fp_poly.hpp"

namespace frobgen::gf {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned k = 1;
  std::vector<std::uint32_t> modulus;
  std::optional<std::uint64_t> size;
};

}  // namespace detail

namespace {

std::optional<std::uint64_t> checked_power(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

FieldSpec build(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = k;
  data->modulus = std::move(modulus);
  data->size = checked_power(p, k);
  return FieldSpec(std::move(data));
}

std::vector<std::uint32_t> search_default_modulus(std::uint32_t p, unsigned k) {
  // Candidates x^k + c where c runs through base-p integers; the highest
  // non-leading coefficient is the most significant digit.
  std::vector<std::uint32_t> f(k + 1, 0);
  f[k] = 1;
  while (true) {
    if (f[0] != 0 && fp::is_irreducible(f, p)) return f;
    unsigned i = 0;
    while (i < k) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == k) throw InternalError("no irreducible polynomial found");
  }
}

}  // namespace

std::uint32_t FieldSpec::p() const { return data_->p; }
unsigned FieldSpec::k() const { return data_->k; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const { return data_->modulus; }
std::optional<std::uint64_t> FieldSpec::size() const { return data_->size; }

FieldSpec FieldSpec::prime_subfield() const {
  if (k() == 1) return *this;
  return default_field(p(), 1);
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, std::vector<std::uint32_t>(k(), 0)); }

FieldElement FieldSpec::one() const {
  std::vector<std::uint32_t> c(k(), 0);
  c[0] = 1 % p();
  return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::from_int(std::int64_t v) const {
  std::vector<std::uint32_t> c(k(), 0);
  c[0] = fp::reduce(v, p());
  return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() > k()) {
    // Reduce a longer polynomial modulo the modulus.
    fp::Poly f(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = fp::reduce(coeffs[i], p());
    fp::trim(f);
    fp::Poly r = fp::rem(f, modulus(), p());
    r.resize(k(), 0);
    return FieldElement(*this, std::move(r));
  }
  std::vector<std::uint32_t> c(k(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = fp::reduce(coeffs[i], p());
  return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::generator_root() const {
  if (k() == 1) return from_int(-static_cast<std::int64_t>(modulus()[0]));
  std::vector<std::uint32_t> c(k(), 0);
  c[1] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement FieldSpec::element_at(std::uint64_t index) const {
  std::vector<std::uint32_t> c(k(), 0);
  for (unsigned i = 0; i < k() && index > 0; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p());
    index /= p();
  }
  return FieldElement(*this, std::move(c));
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  if (data_ == other.data_) return true;
  return p() == other.p() && k() == other.k() && modulus() == other.modulus();
}

std::string FieldSpec::literal() const {
  std::ostringstream os;
  if (k() == 1) {
    os << "GF(" << p() << ")";
    return os.str();
  }
  os << "GF(" << p() << "^" << k() << "; ";
  for (std::size_t i = 0; i < modulus().size(); ++i) {
    if (i > 0) os << ",";
    os << modulus()[i];
  }
  os << ")";
  return os.str();
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw DomainMismatch("field mismatch: " + field_.literal() + " vs " + o.field_.literal());
  }
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1 % field_.p()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::in_prime_field() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  const std::uint32_t p = field_.p();
  std::vector<std::uint32_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp::add_mod(coeffs_[i], o.coeffs_[i], p);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(o);
  const std::uint32_t p = field_.p();
  std::vector<std::uint32_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp::sub_mod(coeffs_[i], o.coeffs_[i], p);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  const std::uint32_t p = field_.p();
  std::vector<std::uint32_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] == 0 ? 0 : p - coeffs_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  const std::uint32_t p = field_.p();
  const unsigned k = field_.k();
  if (k == 1) return FieldElement(field_, {fp::mul_mod(coeffs_[0], o.coeffs_[0], p)});

  std::vector<std::uint64_t> acc(2 * k - 1, 0);
  const bool small = p < (1U << 16U);
  for (unsigned i = 0; i < k; ++i) {
    const std::uint64_t a = coeffs_[i];
    if (a == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      if (small) {
        acc[i + j] += a * o.coeffs_[j];
      } else {
        acc[i + j] = (acc[i + j] + a * o.coeffs_[j]) % p;
      }
    }
  }
  for (auto& v : acc) v %= p;
  // Reduce using x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
  const auto& m = field_.modulus();
  for (unsigned d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t c = acc[d];
    if (c == 0) continue;
    acc[d] = 0;
    for (unsigned j = 0; j < k; ++j) {
      if (m[j] == 0) continue;
      const std::uint64_t sub = (c * m[j]) % p;
      auto& slot = acc[d - k + j];
      slot = (slot + p - sub) % p;
    }
  }
  std::vector<std::uint32_t> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(acc[i]);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero in " + field_.literal());
  const std::uint32_t p = field_.p();
  if (field_.k() == 1) return FieldElement(field_, {fp::inv_mod(coeffs_[0], p)});
  fp::Poly f(coeffs_.begin(), coeffs_.end());
  fp::trim(f);
  fp::Poly inv = fp::invmod(f, field_.modulus(), p);
  inv.resize(field_.k(), 0);
  return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

FieldElement FieldElement::frobenius_power(unsigned e) const {
  const unsigned k = field_.k();
  FieldElement r = *this;
  if (k == 1) return r;
  for (unsigned i = 0; i < e % k; ++i) r = r.pow(field_.p());
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::string FieldElement::to_string() const {
  if (field_.k() == 1) return std::to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    const std::uint32_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "g";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::uint32_t characteristic(const FieldElement& x) { return x.field().p(); }

FieldSpec make_field(std::int64_t p, unsigned k, const std::optional<std::vector<std::int64_t>>& modulus) {
  if (p < 2 || p > INT32_MAX) throw InvalidArgument("field characteristic out of range: " + std::to_string(p));
  if (!fp::is_prime(static_cast<std::uint64_t>(p))) {
    throw InvalidArgument("not prime: " + std::to_string(p));
  }
  if (k < 1) throw InvalidArgument("extension degree must be at least 1");
  const auto up = static_cast<std::uint32_t>(p);
  if (!modulus) return default_field(up, k);

  fp::Poly f(modulus->size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = fp::reduce((*modulus)[i], up);
  fp::trim(f);
  if (fp::degree(f) != static_cast<int>(k)) {
    throw InvalidArgument("modulus must have degree " + std::to_string(k));
  }
  if (f.back() != 1) throw InvalidArgument("modulus must be monic");
  if (!fp::is_irreducible(f, up)) throw InvalidArgument("modulus is reducible over F_" + std::to_string(p));
  return build(up, k, std::move(f));
}

FieldSpec default_field(std::uint32_t p, unsigned k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldSpec> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }
  if (!fp::is_prime(p)) throw InvalidArgument("not prime: " + std::to_string(p));
  if (k < 1) throw InvalidArgument("extension degree must be at least 1");
  std::vector<std::uint32_t> m = k == 1 ? std::vector<std::uint32_t>{0, 1} : search_default_modulus(p, k);
  FieldSpec spec = build(p, k, std::move(m));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(p, k), spec).first->second;
}

FieldElement norm(const FieldElement& x) {
  const FieldSpec& f = x.field();
  FieldElement acc = f.one();
  FieldElement conj = x;
  for (unsigned i = 0; i < f.k(); ++i) {
    acc = acc * conj;
    conj = conj.pow(f.p());
  }
  if (!acc.in_prime_field()) throw InternalError("norm left the prime field");
  return f.prime_subfield().from_int(acc.prime_value());
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t multiplicative_order(const FieldElement& x) {
  if (x.is_zero()) throw InvalidArgument("zero has no multiplicative order");
  const auto size = x.field().size();
  if (!size) throw BudgetExceeded("field too large for order computation");
  std::uint64_t order = *size - 1;
  for (std::uint64_t ell : distinct_prime_factors(order)) {
    while (order % ell == 0 && x.pow(order / ell).is_one()) order /= ell;
  }
  return order;
}

FieldElement find_generator(const FieldSpec& field, std::uint64_t budget) {
  const auto size = field.size();
  if (!size || *size > budget) throw BudgetExceeded("field " + field.literal() + " exceeds enumeration budget");
  const std::uint64_t n = *size - 1;
  const auto primes = distinct_prime_factors(n);
  for (std::uint64_t i = 1; i < *size; ++i) {
    FieldElement g = field.element_at(i);
    if (!g.pow(n).is_one()) throw InternalError("Fermat check failed in " + field.literal());
    bool full = std::none_of(primes.begin(), primes.end(), [&](std::uint64_t ell) { return g.pow(n / ell).is_one(); });
    if (full) return g;
  }
  throw InternalError("no multiplicative generator in " + field.literal());
}

std::vector<FieldElement> enumerate(const FieldSpec& field, std::uint64_t budget) {
  const auto size = field.size();
  if (!size || *size > budget) throw BudgetExceeded("field " + field.literal() + " exceeds enumeration budget");
  std::vector<FieldElement> out;
  out.reserve(*size);
  for (std::uint64_t i = 0; i < *size; ++i) out.push_back(field.element_at(i));
  return out;
}

FieldElement random_like(const FieldElement& proto, std::mt19937_64& rng) {
  const FieldSpec& f = proto.field();
  std::vector<std::int64_t> c(f.k());
  for (auto& v : c) v = static_cast<std::int64_t>(rng() % f.p());
  return f.from_coeffs(c);
}

namespace {

struct LiteralCursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "' in field literal", pos);
  }
  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    const std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (INT64_C(1) << 40)) throw ParseError("integer too large in field literal", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected integer in field literal", pos);
    return neg ? -v : v;
  }
};

}  // namespace

FieldSpec parse_field_literal(const std::string& text) {
  LiteralCursor cur{text};
  cur.skip_ws();
  if (text.compare(cur.pos, 2, "GF") != 0) throw ParseError("field literal must start with GF", cur.pos);
  cur.pos += 2;
  cur.expect('(');
  const std::int64_t p = cur.integer();
  unsigned k = 1;
  std::optional<std::vector<std::int64_t>> modulus;
  if (cur.accept('^')) {
    const std::int64_t kk = cur.integer();
    if (kk < 1 || kk > 4096) throw ParseError("extension degree out of range", cur.pos);
    k = static_cast<unsigned>(kk);
    if (cur.accept(';')) {
      modulus.emplace();
      do {
        modulus->push_back(cur.integer());
      } while (cur.accept(','));
    }
  }
  cur.expect(')');
  cur.skip_ws();
  if (cur.pos != text.size()) throw ParseError("trailing characters after field literal", cur.pos);
  return make_field(p, k, modulus);
}

std::size_t FieldElementHash::operator()(const FieldElement& x) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint32_t c : x.coeffs()) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
  return h;
}

}  // namespace frobgen::gf
