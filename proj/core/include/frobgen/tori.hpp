// Weil restrictions Res_{E/F_p} G_m for E = F_{p^n}: the regular
// representation z -> M_z in the power basis and its general matrix of
// linear forms.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobgen/matfrob.hpp"

namespace frobgen {

struct TorusSpec {
  std::uint32_t p = 0;
  unsigned n = 0;
  /// E = F_{p^n}; the basis is 1, g, ..., g^{n-1} for the modulus root g.
  gf::FieldSpec field;
  sym::Ring ring;
  /// Entry (i, j) is a linear form in ring's variables; equals M_z at the
  /// coordinates of z.
  SymMatrix general_matrix;
};

/// Default variable names x_1, ..., x_n.
std::vector<std::string> default_torus_vars(unsigned n);

TorusSpec weil_restriction(std::uint32_t p, unsigned n,
                           const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt,
                           std::optional<std::vector<std::string>> vars = std::nullopt);

/// Column j holds the coordinates of z * g^j.
FiniteMatrix regular_rep(const TorusSpec& spec, const gf::FieldElement& z);

/// Element of E with the given coordinates; inverse of reading the first column.
gf::FieldElement torus_element(const TorusSpec& spec, const std::vector<gf::FieldElement>& coords);

/// True iff a (over any extension of F_p) has the shape of general_matrix and det != 0.
bool torus_member(const TorusSpec& spec, const FiniteMatrix& a);

/// All points of T over the field L (an extension of F_p), i.e. general_matrix
/// at every coordinate tuple in L^n with nonzero determinant.
std::vector<FiniteMatrix> torus_points(const TorusSpec& spec, const gf::FieldSpec& L, std::uint64_t budget = 1U << 20U);

struct TorusGroupInfo {
  std::uint64_t order = 0;
  bool cyclic = false;
  /// A point of full order when cyclic.
  std::optional<FiniteMatrix> generator;
};

/// |T(F_p)| by enumeration and cyclicity by exhibiting a point of full order.
TorusGroupInfo order_and_cyclicity(const TorusSpec& spec, std::uint64_t budget = 1U << 20U);

}  // namespace frobgen
