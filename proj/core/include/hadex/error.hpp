#pragma once

#include <stdexcept>
#include <string>

namespace hadex {

/// A precondition of a mathematical operation failed on the given input
/// (length mismatch, guard exceeded, NAE condition violated, ...).
///
/// `witness()` optionally carries a JSON-encoded value that explains the
/// failure, e.g. the column set violating the NAE condition.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what, std::string witness_json = {})
      : std::runtime_error(what), witness_(std::move(witness_json)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A size guard (2^n materialization, 2^k scan, subset count) was exceeded.
class GuardError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input could not be parsed into the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hadex
