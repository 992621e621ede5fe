#pragma once

#include <stdexcept>
#include <string>

namespace cycount {

// Exit-code contract for the CLI: input 2, budget/overflow 3, internal 4.

struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct overflow_error : std::runtime_error {
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// Invariant breach. Reaching this is a bug, not a user error.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cycount
