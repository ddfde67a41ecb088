#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <mpfr.h>

namespace zr {

/// Thrown when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an evaluation hits a pole of the underlying function.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a value that must stay finite overflows.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when reaching the requested tolerance would exceed the
/// working-precision budget (e.g. alternating sums at large n).
class PrecisionBudgetError : public std::runtime_error {
 public:
  PrecisionBudgetError(const std::string& msg, long required_bits, long budget_bits)
      : std::runtime_error(msg), required_bits(required_bits), budget_bits(budget_bits) {}
  long required_bits;
  long budget_bits;
};

// Working precision plus the tolerance every evaluator aims for.
// Threaded through all numeric operations; values constructed under one
// context may be combined freely (each carries its own mpfr precision).
struct PrecisionContext {
  mpfr_prec_t bits = 128;
  double target_tol = 1e-30;
  // Cap on the internal working precision any single operation may
  // request (guard bits for cancellation-aware sums count against it).
  long max_working_bits = 1L << 17;

  PrecisionContext() = default;
  PrecisionContext(mpfr_prec_t bits_, double tol_) : bits(bits_), target_tol(tol_) {
    validate();
  }

  void validate() const {
    if (bits < 64) throw DomainError("PrecisionContext: bits must be >= 64");
    if (!(target_tol > 0.0)) throw DomainError("PrecisionContext: target_tol must be positive");
    if (std::log2(target_tol) < double(8 - bits))
      throw DomainError("PrecisionContext: target_tol below 2^(8-bits)");
  }

  /// Bits needed to resolve target_tol (rounded up), >= 8.
  long tol_bits() const {
    double b = -std::log2(target_tol);
    long r = (long)std::ceil(b);
    return r < 8 ? 8 : r;
  }
};

}  // namespace zr
