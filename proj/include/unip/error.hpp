#pragma once

#include <stdexcept>
#include <string>

namespace unip {

// Input violates a mathematical precondition (bad prime, wrong dimension, ...).
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input; carries the byte offset where parsing stopped.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

  private:
    std::size_t pos_;
};

// Broken internal invariant. Seeing one of these means a bug in this library.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace unip
