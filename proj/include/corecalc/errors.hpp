#pragma once

#include <stdexcept>
#include <string>

namespace corecalc {

/** Base class for all engine errors. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Operands live in different ambient spaces. */
struct DimensionMismatch : Error {
  using Error::Error;
};

/** An operation's stated precondition does not hold for the given inputs. */
struct PreconditionError : Error {
  using Error::Error;
};

/** A set that must be full-dimensional is not. */
struct NotCoreSolidError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/** An epigraph candidate describes a function taking -inf, or an empty epigraph. */
struct ImproperFunctionError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/** A marginal value is -inf (downward ray in the projected epigraph). */
struct UnboundedBelowError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/** Malformed problem file / unknown object / arity error at the CLI boundary. */
struct InputError : Error {
  using Error::Error;
};

}  // namespace corecalc
