#pragma once

#include <stdexcept>
#include <string>

namespace ans {

/// Malformed input file (automaton or normal-form text). Carries the
/// 1-based line number when known (0 = unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : std::move(msg)),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Structurally valid input that violates a semantic precondition:
/// finite language where an infinite one is required, word outside L,
/// ill-padded relation, alphabet mismatch, and so on.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ans
