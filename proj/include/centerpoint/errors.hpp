#pragma once

#include <stdexcept>
#include <string>

namespace centerpoint {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CENTERPOINT_DEFINE_ERROR(Name)      \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(std::string(#Name ": ") + what) {} \
  }

// group_core
CENTERPOINT_DEFINE_ERROR(ClosureExceedsLimit);
CENTERPOINT_DEFINE_ERROR(InvalidPermutation);
CENTERPOINT_DEFINE_ERROR(UnsupportedParameter);

// scalar_field
CENTERPOINT_DEFINE_ERROR(DivisionByZero);
CENTERPOINT_DEFINE_ERROR(ContextMismatch);
CENTERPOINT_DEFINE_ERROR(BoundTooLargeForModulus);

// point_solver
CENTERPOINT_DEFINE_ERROR(SplitFailure);
CENTERPOINT_DEFINE_ERROR(LiftFailure);

// idempotents
CENTERPOINT_DEFINE_ERROR(SingularMatrix);
CENTERPOINT_DEFINE_ERROR(NotAPerfectSquare);
CENTERPOINT_DEFINE_ERROR(NonIntegralCharacter);

// regular_rep
CENTERPOINT_DEFINE_ERROR(NotInComponent);
CENTERPOINT_DEFINE_ERROR(RankMismatch);
CENTERPOINT_DEFINE_ERROR(NotInvariant);
CENTERPOINT_DEFINE_ERROR(BadCharacteristic);

// symmetry
CENTERPOINT_DEFINE_ERROR(ArityMismatch);

// input parsing (cli, json)
CENTERPOINT_DEFINE_ERROR(InputError);

#undef CENTERPOINT_DEFINE_ERROR

}  // namespace centerpoint
