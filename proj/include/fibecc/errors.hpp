#pragma once

#include <stdexcept>
#include <string>

namespace fibecc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FIBECC_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    explicit Name(const std::string& what)     \
        : Error(#Name ": " + what) {}          \
  }

FIBECC_DEFINE_ERROR(NotPrime);
FIBECC_DEFINE_ERROR(NotInvertible);
FIBECC_DEFINE_ERROR(NotPrimitive);
FIBECC_DEFINE_ERROR(RangeError);
FIBECC_DEFINE_ERROR(SingularCurve);
FIBECC_DEFINE_ERROR(PointNotOnCurve);
FIBECC_DEFINE_ERROR(CurveTooLarge);
FIBECC_DEFINE_ERROR(DimensionMismatch);
FIBECC_DEFINE_ERROR(SizeMismatch);
FIBECC_DEFINE_ERROR(UnknownSymbol);
FIBECC_DEFINE_ERROR(UnknownPoint);
FIBECC_DEFINE_ERROR(LengthOverflow);
FIBECC_DEFINE_ERROR(SubgroupMismatch);
FIBECC_DEFINE_ERROR(ParseError);

#undef FIBECC_DEFINE_ERROR

}  // namespace fibecc
