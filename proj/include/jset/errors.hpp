#pragma once

#include <stdexcept>
#include <string>

namespace jset {

// Bad input or violated precondition. CLI exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A p-adic computation ran past its reliable precision. CLI exit code 2.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, long required)
      : std::runtime_error(what), required_(required) {}
  long required() const { return required_; }

 private:
  long required_;
};

}  // namespace jset
