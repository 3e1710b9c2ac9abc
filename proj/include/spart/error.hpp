#pragma once

#include <stdexcept>
#include <string>

namespace spart {

/// Base of every error raised by the core library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's supported domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on a pole of the evaluated function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Requested size would exhaust memory.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not reach the requested tolerance.
/// Carries the best estimate that was obtained and the quantity's name.
class AccuracyError : public Error {
 public:
  AccuracyError(std::string quantity, double best_estimate, double error_estimate)
      : Error("tolerance not met for " + quantity),
        quantity_(std::move(quantity)),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  const std::string& quantity() const noexcept { return quantity_; }
  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  std::string quantity_;
  double best_estimate_;
  double error_estimate_;
};

}  // namespace spart
