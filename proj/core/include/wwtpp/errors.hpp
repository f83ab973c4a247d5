#pragma once

#include <stdexcept>
#include <string>

namespace wwtpp {

// Malformed instance/solution text, or an instance rejected by validation on read.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance cannot be expressed in the requested encoding.
struct EncodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Random placement failed, or generator parameters are inconsistent.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration would exceed the configured decision budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External solver process could not be started (or the shell could not find it).
struct SpawnError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wwtpp
