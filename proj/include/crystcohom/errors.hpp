#pragma once

#include <stdexcept>
#include <string>

namespace crystcohom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fixed-width intermediate left its representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// solve_exact: the right-hand side is not in the integer column span.
class NoIntegerSolution : public Error {
 public:
  using Error::Error;
};

/// subquotient_invariants / cohomology_from_coboundaries: consecutive maps
/// do not compose to zero.
class ChainConditionError : public Error {
 public:
  using Error::Error;
};

/// Operands that belong to different ambient groups.
class MismatchedGroup : public Error {
 public:
  using Error::Error;
};

/// The holonomy matrix is not invertible over Z or does not have the
/// declared order.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

/// Internal consistency checks that should never fire (periodicity,
/// rational rank cross-check).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace crystcohom
