#pragma once

#include <stdexcept>
#include <string>

namespace reylie {

/// Malformed or inconsistent input: shape mismatches, unparsable rationals,
/// structures that violate a constructor's hypothesis. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace reylie
