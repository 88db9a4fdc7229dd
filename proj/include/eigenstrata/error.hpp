#pragma once

#include <stdexcept>
#include <string>

namespace eigenstrata {

// Base of every error raised by the library. Subclasses exist so callers
// (and the CLI exit-code mapping) can tell failure kinds apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define EIGENSTRATA_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

EIGENSTRATA_ERROR(ParseError);
EIGENSTRATA_ERROR(DimensionError);
EIGENSTRATA_ERROR(DivisionByZeroError);
EIGENSTRATA_ERROR(SingularMatrixError);
EIGENSTRATA_ERROR(NonSquareError);
EIGENSTRATA_ERROR(BadPrimeError);
EIGENSTRATA_ERROR(ReconstructFailError);
EIGENSTRATA_ERROR(NotMonicError);
EIGENSTRATA_ERROR(SizeError);
EIGENSTRATA_ERROR(SizeGuardError);
EIGENSTRATA_ERROR(SizeMismatchError);
EIGENSTRATA_ERROR(InexactDivisionError);
EIGENSTRATA_ERROR(IndexError);
EIGENSTRATA_ERROR(DuplicateEigenvalueError);
EIGENSTRATA_ERROR(NonSymmetricError);
EIGENSTRATA_ERROR(VerificationFailError);
EIGENSTRATA_ERROR(MixedDegreeError);
EIGENSTRATA_ERROR(NotOnVarietyError);
EIGENSTRATA_ERROR(DegenerateError);
EIGENSTRATA_ERROR(NonConvergenceError);

#undef EIGENSTRATA_ERROR

}  // namespace eigenstrata
