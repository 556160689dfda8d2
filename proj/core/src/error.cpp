#include "frobgen/error.hpp"

namespace frobgen {

ParseError::ParseError(const std::string& what, std::size_t position)
    : InvalidArgument(what + " at position " + std::to_string(position)), position_(position) {}

}  // namespace frobgen
