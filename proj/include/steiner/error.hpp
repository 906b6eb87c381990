#pragma once
/* Two failure kinds: StructuralError for malformed input or contract misuse,
   CheckFailure for a mathematical invariant the library promises but found broken. */
#include <stdexcept>
#include <string>

namespace steiner {

struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& m) : std::runtime_error(m) {}
};

struct CheckFailure : std::runtime_error {
  explicit CheckFailure(const std::string& m) : std::runtime_error(m) {}
};

}
