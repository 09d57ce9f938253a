#pragma once

#include <stdexcept>
#include <string>

namespace asm3 {

// Exact division failed: the divisor does not divide the dividend.
// Every division in this library is backed by a divisibility argument,
// so a nonzero remainder means a broken invariant upstream, not bad data.
class NonZeroRemainder : public std::logic_error {
 public:
  explicit NonZeroRemainder(const std::string& what) : std::logic_error(what) {}
};

// A value that must be an integer (a weighted count, a scaled coefficient)
// came out with a nontrivial denominator or a leftover sqrt(3) part.
class NonIntegerCoefficient : public std::logic_error {
 public:
  explicit NonIntegerCoefficient(const std::string& what)
      : std::logic_error(what) {}
};

// The constraint system should single out one function up to scale; any
// other kernel dimension means the constraint matrix was built wrong.
class KernelDimensionError : public std::logic_error {
 public:
  explicit KernelDimensionError(const std::string& what)
      : std::logic_error(what) {}
};

// Division by an exactly-zero scalar.
class ZeroDenominator : public std::logic_error {
 public:
  explicit ZeroDenominator(const std::string& what) : std::logic_error(what) {}
};

// A derivative/evaluation request outside the supported range.
class OrderTooLarge : public std::invalid_argument {
 public:
  explicit OrderTooLarge(const std::string& what)
      : std::invalid_argument(what) {}
};

// Input grid is not an alternating sign matrix.
class NotAnASM : public std::invalid_argument {
 public:
  explicit NotAnASM(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace asm3
