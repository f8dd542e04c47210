#pragma once

#include <stdexcept>
#include <string>

namespace pstlab {

/// Bad user input: malformed graphs, out-of-range vertices, unparsable specs.
/// The CLI maps this to exit code 1.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to meet its contract (e.g. Jacobi sweep limit).
/// The CLI maps this to exit code 2.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pstlab
