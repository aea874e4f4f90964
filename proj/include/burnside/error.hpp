#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

/// Base class for every error raised by the library. The CLI maps these to
/// diagnostics on stderr.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define BURNSIDE_DEFINE_ERROR(Name)                                           \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}      \
  }

BURNSIDE_DEFINE_ERROR(DegreeMismatch);
BURNSIDE_DEFINE_ERROR(CapExceeded);
BURNSIDE_DEFINE_ERROR(InvalidSubgroup);
BURNSIDE_DEFINE_ERROR(InvalidPrime);
BURNSIDE_DEFINE_ERROR(BasisMismatch);
BURNSIDE_DEFINE_ERROR(NonIntegralSolution);
BURNSIDE_DEFINE_ERROR(SeparationFailure);
BURNSIDE_DEFINE_ERROR(InvalidBRing);
BURNSIDE_DEFINE_ERROR(NotLocal);
BURNSIDE_DEFINE_ERROR(IdempotentLiftDivergence);
BURNSIDE_DEFINE_ERROR(NegativeRank);
BURNSIDE_DEFINE_ERROR(ResolutionTooLarge);
BURNSIDE_DEFINE_ERROR(InvalidLabel);
BURNSIDE_DEFINE_ERROR(ParseError);
BURNSIDE_DEFINE_ERROR(UnknownName);

#undef BURNSIDE_DEFINE_ERROR

}  // namespace burnside
