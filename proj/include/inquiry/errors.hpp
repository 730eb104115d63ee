#pragma once

#include <stdexcept>
#include <string>

namespace inquiry {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: duplicate elements, order cycles, unknown atoms,
// expression syntax errors, cross-space operands, vacuous meets, ...
struct invalid_input : error {
  using error::error;
};

// A hard size cap was exceeded (element count, atom count without the
// override flag). Distinct from invalid_input so callers can map it to a
// dedicated exit code.
struct capacity_error : error {
  using error::error;
};

}  // namespace inquiry
