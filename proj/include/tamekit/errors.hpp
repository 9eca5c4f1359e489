#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamekit {

/// Operands live in polynomial rings of different arity, or an index is out of range.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A deterministic step budget (Groebner reductions, search candidates) ran out.
/// Never a wrong answer: the caller learns that the computation was not finished.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a 0-based character offset into the
/// text that was being parsed (or the line number for line-oriented formats).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tamekit
