#pragma once

#include <stdexcept>
#include <string>

namespace cfk {

/// A complex failed validation where a valid one was required.
struct InvalidComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A boundary matrix does not square to zero.
struct NotAComplexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A chain map does not commute with the boundaries.
struct NotChainMapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested a torus knot family with no known staircase description.
struct UnsupportedTorusKnotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file or schema violation.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cfk
