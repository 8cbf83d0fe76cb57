#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfs {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text (presentations, family specs). Carries a 0-based offset
// into the input, or a 1-based line number for multi-line inputs.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position, std::size_t line = 0)
      : Error(msg), position_(position), line_(line) {}
  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

// Well-formed input that violates a mathematical precondition
// (non-coprime pair, odd 2k, alpha < 2, presentation not small, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant: integer overflow, non-integral genus,
// an impossible case that showed up anyway.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sfs
