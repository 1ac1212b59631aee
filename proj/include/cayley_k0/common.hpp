#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cayley_k0 {

// All arithmetic is exact; mpz_class never overflows and never rounds.
using Int = mpz_class;

// Determinant-divisor enumeration is combinatorial and only offered for
// small matrices; larger requests are rejected loudly.
class unsupported_size_error : public std::runtime_error {
 public:
  explicit unsupported_size_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised by snf_factors_via_divisors when some alpha_i = 0, i.e. the
// divisor-quotient route's hypothesis fails.
class zero_divisor_chain_error : public std::runtime_error {
 public:
  explicit zero_divisor_chain_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised by graph_monoid_enumerate when the state budget is exhausted.
// Not a correctness failure, only one of scale (or an infinite monoid).
class budget_exceeded_error : public std::runtime_error {
 public:
  explicit budget_exceeded_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised when a theorem-backed exact division leaves a remainder; this
// signals an internal inconsistency and must never be swallowed.
class inexact_division_error : public std::logic_error {
 public:
  explicit inexact_division_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace cayley_k0
