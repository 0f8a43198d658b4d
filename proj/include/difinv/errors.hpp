#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace difinv {

/// Incompatible operands: wrong derivation for a variable, division by a
/// zero function, unassigned variable in an evaluation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured limit (jet order, ansatz size, supported equation order)
/// was exceeded. Never a silent truncation.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The setup itself is unusable, e.g. a generator whose multiplier is not
/// polynomial.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every random sample hit a singular point.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction that must yield an invariant did not; what() carries the
/// residual certificate.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace difinv
