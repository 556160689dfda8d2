#include "frobgen/embedding.hpp"

#include "frobgen/error.hpp"
#include "frobgen/fp_linalg.hpp"

namespace frobgen::gf {

FieldEmbedding::FieldEmbedding(FieldSpec small, FieldSpec big, FieldElement root_image)
    : small_(std::move(small)), big_(std::move(big)) {
  powers_.push_back(big_.one());
  for (unsigned i = 1; i < small_.k(); ++i) powers_.push_back(powers_.back() * root_image);
}

FieldElement FieldEmbedding::map(const FieldElement& x) const {
  if (x.field() != small_) throw DomainMismatch("embedding source is " + small_.literal() + ", got " + x.field().literal());
  FieldElement acc = big_.zero();
  for (unsigned i = 0; i < small_.k(); ++i) {
    const std::uint32_t c = x.coeffs()[i];
    if (c != 0) acc += big_.from_int(c) * powers_[i];
  }
  return acc;
}

std::vector<FieldElement> subfield_basis(const FieldSpec& big, unsigned d) {
  const unsigned K = big.k();
  if (d == 0 || K % d != 0) throw DomainMismatch("subfield degree must divide " + std::to_string(K));
  const std::uint32_t p = big.p();
  // Matrix of z -> z^{p^d} - z in the power basis.
  fp::DenseMatrix m(K, K);
  for (unsigned j = 0; j < K; ++j) {
    std::vector<std::int64_t> e(K, 0);
    e[j] = 1;
    const FieldElement z = big.from_coeffs(e);
    const FieldElement img = z.frobenius_power(d) - z;
    for (unsigned i = 0; i < K; ++i) m.at(i, j) = img.coeffs()[i];
  }
  std::vector<FieldElement> out;
  for (const auto& v : fp::kernel_basis(m, p)) {
    out.push_back(big.from_coeffs(std::vector<std::int64_t>(v.begin(), v.end())));
  }
  if (out.size() != d) throw InternalError("subfield has unexpected dimension");
  return out;
}

FieldEmbedding embed_field(const FieldSpec& small, const FieldSpec& big) {
  if (small.p() != big.p()) throw DomainMismatch("embedding between different characteristics");
  if (big.k() % small.k() != 0) {
    throw DomainMismatch(small.literal() + " does not embed in " + big.literal());
  }
  if (small.k() == 1) return FieldEmbedding(small, big, big.zero());
  const std::uint32_t p = big.p();
  const auto basis = subfield_basis(big, small.k());
  const auto& mod = small.modulus();
  const auto count = small.size();
  if (!count) throw BudgetExceeded("subfield too large to enumerate");
  for (std::uint64_t idx = 1; idx < *count; ++idx) {
    FieldElement z = big.zero();
    std::uint64_t rest = idx;
    for (const auto& b : basis) {
      const auto digit = static_cast<std::uint32_t>(rest % p);
      rest /= p;
      if (digit != 0) z += big.from_int(digit) * b;
    }
    FieldElement val = big.zero();
    for (std::size_t i = mod.size(); i-- > 0;) val = val * z + big.from_int(mod[i]);
    if (val.is_zero()) return FieldEmbedding(small, big, z);
  }
  throw InternalError("no root of the source modulus in the target field");
}

}  // namespace frobgen::gf
