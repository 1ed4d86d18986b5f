#pragma once

#include <stdexcept>
#include <string>

namespace nilsol {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveDimError : Error {
  using Error::Error;
};
struct IndexOutOfRangeError : Error {
  using Error::Error;
};
struct DuplicateEntryError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct ZeroScaleError : Error {
  using Error::Error;
};
struct NotNilpotentError : Error {
  using Error::Error;
};
struct NotUnimodularError : Error {
  using Error::Error;
};
struct NotALieAlgebraError : Error {
  using Error::Error;
};

/// The soliton-equation residual and the derivation-defect criterion disagreed on a
/// soliton verdict.  This never happens on valid inputs; it flags a bug.
struct OracleDisagreementError : Error {
  using Error::Error;
};

struct UnknownFamilyError : Error {
  using Error::Error;
};
struct NoConvergenceError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace nilsol
