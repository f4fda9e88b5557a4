#pragma once

#include <stdexcept>
#include <string>

namespace slicekit {

/// Base class for failures that are a property of the mathematical input
/// (as opposed to a malformed document). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class PreconditionError : public DomainError {
 public:
  explicit PreconditionError(const std::string& message)
      : DomainError("PreconditionViolation", message) {}
};

/// Raised when the semisimple part of an element has an eigenvalue outside Q.
/// `factor()` is the part of the minimal polynomial left after dividing out
/// every rational root.
class IrrationalSpectrum : public DomainError {
 public:
  explicit IrrationalSpectrum(std::string factor)
      : DomainError("IrrationalSpectrum",
                    "semisimple part has a non-rational eigenvalue; offending factor " + factor),
        factor_(std::move(factor)) {}

  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

/// A document or argument could not be parsed. The CLI maps these to exit code 2.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slicekit
