// Embeddings F_{p^k} -> F_{p^K} for k | K.
#pragma once

#include <vector>

#include "frobgen/gf.hpp"

namespace frobgen::gf {

class FieldEmbedding {
 public:
  FieldEmbedding(FieldSpec small, FieldSpec big, FieldElement root_image);

  const FieldSpec& source() const { return small_; }
  const FieldSpec& target() const { return big_; }
  /// Image of the modulus root of the source field.
  const FieldElement& root_image() const { return powers_.size() > 1 ? powers_[1] : powers_[0]; }

  FieldElement map(const FieldElement& x) const;

 private:
  FieldSpec small_;
  FieldSpec big_;
  std::vector<FieldElement> powers_;
};

/// Embedding of small into big; throws DomainMismatch if the characteristics
/// differ or deg(small) does not divide deg(big).
FieldEmbedding embed_field(const FieldSpec& small, const FieldSpec& big);

/// The subfield F_{p^d} of big as an F_p-basis of coefficient vectors.
std::vector<FieldElement> subfield_basis(const FieldSpec& big, unsigned d);

}  // namespace frobgen::gf
