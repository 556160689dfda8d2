// Plain-text description of a symbolic Frobenius module.
//
//   # comment
//   p = 5
//   k = 1            (q = p^k; "q_exponent" is accepted as a synonym)
//   n = 2
//   vars = s, t
//   A = [[s^3 + s*t^2, s^2*t + 4*t^3];
//        [3*s^2*t + 2*t^3, s^3 + s*t^2]]
//
// A value may continue on following lines while its brackets are open.
// Every key is required exactly once; unknown keys are rejected.
#pragma once

#include <string>
#include <vector>

#include "frobgen/frobmod.hpp"

namespace frobgen {

struct ModuleFile {
  std::uint32_t p = 0;
  unsigned k = 1;
  unsigned n = 0;
  std::vector<std::string> vars;
  SymMatrix A;

  const sym::Ring& ring() const { return A(0, 0).ring(); }
  FrobeniusQ q() const { return FrobeniusQ{k}; }
  /// The default field of the module's coefficients, F_{p^k}.
  gf::FieldSpec base_field() const;
  FrobModule<sym::RatFunc> module() const { return FrobModule<sym::RatFunc>::make(A, q()); }
};

/// Throws ParseError (with the 1-based line number as position) on malformed
/// input and InvalidArgument on inconsistent values.
ModuleFile parse_module_file(const std::string& text);
ModuleFile load_module_file(const std::string& path);
std::string to_module_text(const ModuleFile& m);

}  // namespace frobgen
