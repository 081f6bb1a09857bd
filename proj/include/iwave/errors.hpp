#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace iwave {

/// Base class for all failures raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration text could not be parsed, or a parsed value violates a
/// model invariant. Maps to CLI exit status 2.
class config_error : public error {
 public:
  using error::error;
};

/// A numerical procedure failed (non-convergence, strip breach, ...).
/// Maps to CLI exit status 3.
class numerical_error : public error {
 public:
  using error::error;
};

/// An iteration ran out of budget; carries the last residual reached.
class convergence_error : public numerical_error {
 public:
  convergence_error(const std::string& what, double residual)
      : numerical_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_ = 0.0;
};

/// The interface left the strip -l1 < eta < l2 where the model is valid.
class strip_breach_error : public numerical_error {
 public:
  explicit strip_breach_error(const std::string& what,
                              double time = std::numeric_limits<double>::quiet_NaN())
      : numerical_error(what), time_(time) {}
  /// Time of the breach when raised during evolution, NaN otherwise.
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace iwave
