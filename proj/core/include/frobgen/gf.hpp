// Exact arithmetic in F_p and F_{p^k} = F_p[x]/(f).
//
// A FieldSpec is a cheap shared handle to immutable field data. Elements are
// coefficient vectors in the power basis 1, g, ..., g^{k-1} of the modulus
// root g. Mixing elements of different fields throws DomainMismatch.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace frobgen::gf {

class FieldElement;

namespace detail {
struct FieldData;
}

class FieldSpec {
 public:
  std::uint32_t p() const;
  unsigned k() const;
  /// Monic modulus, low degree first, size k + 1. For k = 1 this is {0, 1}.
  const std::vector<std::uint32_t>& modulus() const;
  /// p^k, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const;
  bool is_prime_field() const { return k() == 1; }

  FieldSpec prime_subfield() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  /// Coefficients low degree first; shorter vectors are zero padded.
  FieldElement from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  /// The class of x in F_p[x]/(modulus); equals 0 in a prime field.
  FieldElement generator_root() const;
  /// Element whose coefficient vector is the base-p expansion of index (c_0 least significant).
  FieldElement element_at(std::uint64_t index) const;

  bool operator==(const FieldSpec& other) const;
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }

  /// Field literal, e.g. "GF(5)" or "GF(5^2; 3,0,1)".
  std::string literal() const;

  // Use make_field / default_field instead.
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  const detail::FieldData& data() const { return *data_; }

 private:
  std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
 public:
  const FieldSpec& field() const { return field_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True iff the element lies in the prime subfield.
  bool in_prime_field() const;
  /// Value of the constant coefficient (meaningful when in_prime_field()).
  std::uint32_t prime_value() const { return coeffs_[0]; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws InvalidArgument for zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  /// x^{p^e}.
  FieldElement frobenius_power(unsigned e) const;

  FieldElement zero_like() const { return field_.zero(); }
  FieldElement one_like() const { return field_.one(); }
  FieldElement scalar_like(std::int64_t v) const { return field_.from_int(v); }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  /// Arbitrary total order (coefficient-lexicographic) for use as map keys.
  bool operator<(const FieldElement& o) const { return coeffs_ < o.coeffs_; }

  /// "3" in a prime field, "2*g^2 + g + 4" in an extension.
  std::string to_string() const;

 private:
  friend class FieldSpec;
  FieldElement(FieldSpec field, std::vector<std::uint32_t> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  void require_same_field(const FieldElement& o) const;

  FieldSpec field_;
  std::vector<std::uint32_t> coeffs_;
};

std::uint32_t characteristic(const FieldElement& x);

/// Validated field. Omitting the modulus for k > 1 selects the default modulus:
/// the smallest irreducible monic polynomial when coefficient vectors are read
/// from the highest degree down.
FieldSpec make_field(std::int64_t p, unsigned k,
                     const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt);

/// Cached field with the default modulus; repeated calls share one handle.
FieldSpec default_field(std::uint32_t p, unsigned k);

/// Product of the Galois conjugates x^{p^i}, i < k, returned in F_p.
FieldElement norm(const FieldElement& x);

/// Multiplicative generator, first in enumeration order, with its order
/// certified through the prime factors of p^k - 1.
FieldElement find_generator(const FieldSpec& field, std::uint64_t budget = 1U << 22U);

/// All p^k elements in index order (see FieldSpec::element_at).
std::vector<FieldElement> enumerate(const FieldSpec& field, std::uint64_t budget = 1U << 22U);

/// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const FieldElement& x);

FieldElement random_like(const FieldElement& proto, std::mt19937_64& rng);

/// Parses "GF(p)", "GF(p^k)" or "GF(p^k; c_0,...,c_k)".
FieldSpec parse_field_literal(const std::string& text);

/// Prime factorization by trial division, primes listed once each.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

struct FieldElementHash {
  std::size_t operator()(const FieldElement& x) const noexcept;
};

}  // namespace frobgen::gf
