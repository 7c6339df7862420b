#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace k3char {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Invalid arguments or malformed input. CLI maps this to exit code 2.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed. CLI maps this to exit code 3.
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input polynomial is not a genuine character.
struct NotACharacterError : ConsistencyError {
  explicit NotACharacterError(const std::string& msg) : ConsistencyError(msg) {}
};

// D-type highest weight with a nonzero last coordinate denotes two
// non-isomorphic mirror representations; callers must disambiguate.
struct HalfSpinError : DomainError {
  explicit HalfSpinError(const std::string& msg) : DomainError(msg) {}
};

}  // namespace k3char
