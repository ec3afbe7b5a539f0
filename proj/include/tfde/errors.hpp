#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfde {

/// Wrong vector length or similar caller bug.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// 1 + d*lambda_k vanished (or nearly) in a shifted structured solve.
class SingularShiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight sequence shorter than the system order.
class InsufficientWeightsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reference-only operation asked to run above its size cap.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arnoldi breakdown with a nonzero residual.
class BreakdownError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operator callback produced NaN or Inf.
class OperatorFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear solve failed inside a time march.
class MarchFailure : public std::runtime_error {
 public:
  MarchFailure(std::size_t step, const std::string& what)
      : std::runtime_error("time step " + std::to_string(step) + ": " + what),
        step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Invalid configuration file contents.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

inline void require_length(std::size_t got, std::size_t want,
                           const char* what) {
  if (got != want) {
    throw ContractViolation(std::string(what) + ": length " +
                            std::to_string(got) + ", expected " +
                            std::to_string(want));
  }
}

}  // namespace tfde
