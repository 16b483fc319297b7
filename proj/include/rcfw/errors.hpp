#pragma once

#include <stdexcept>
#include <string>

namespace rcfw {

// Error taxonomy mirrors the CLI exit codes: SyntaxError -> 3,
// CapacityError / UnsupportedError -> 2. Everything else is a plain
// std::runtime_error and treated as a bug.

struct SyntaxError : std::runtime_error {
  int line, col;
  SyntaxError(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

// Input exceeds a documented hard limit (variable count, p, search budget).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request is well-formed but outside the supported fragment (e.g. ambient
// dimension too high for an exact answer).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rcfw
