#pragma once

#include <stdexcept>
#include <string>

namespace polyame {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLYAME_DEFINE_ERROR(Name)      \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

POLYAME_DEFINE_ERROR(NotPrime);
POLYAME_DEFINE_ERROR(DivisionByZero);
POLYAME_DEFINE_ERROR(IndexError);
POLYAME_DEFINE_ERROR(ShapeError);
POLYAME_DEFINE_ERROR(UnknownSolid);
POLYAME_DEFINE_ERROR(NoOppositeFace);
POLYAME_DEFINE_ERROR(UnsupportedPrime);
POLYAME_DEFINE_ERROR(TooLarge);
POLYAME_DEFINE_ERROR(ZeroState);
POLYAME_DEFINE_ERROR(NotNormalized);
POLYAME_DEFINE_ERROR(FormatError);
POLYAME_DEFINE_ERROR(ConfigError);

#undef POLYAME_DEFINE_ERROR

}  // namespace polyame
