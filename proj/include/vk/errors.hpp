#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed Gauss-code text. `position` is the byte offset of the offending
// character in the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Structurally invalid Gauss code: a label that does not occur exactly twice,
// two passages of the same label with the same role, or mismatched signs.
class ValidationError : public Error {
 public:
  enum class Kind { LabelCount, Roles, Signs, TooLarge };

  ValidationError(Kind kind, std::string label, const std::string& what)
      : Error(what), kind_(kind), label_(std::move(label)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Kind kind_;
  std::string label_;
};

// Precondition failure on an otherwise valid code: unknown label, wrong
// component count, move pattern absent, and the like.
class DomainError : public Error {
 public:
  using Error::Error;
};

// 64-bit coefficient arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace vk
