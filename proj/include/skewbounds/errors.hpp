/**
 * This code is part of skewbounds.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace skewbounds {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

#define SKEWBOUNDS_DEFINE_ERROR(NAME)                                         \
  class NAME : public Error {                                                 \
  public:                                                                     \
    explicit NAME(const std::string &msg) : Error(#NAME ": " + msg) {}        \
  }

SKEWBOUNDS_DEFINE_ERROR(ShapeMismatch);
SKEWBOUNDS_DEFINE_ERROR(NotHermitian);
SKEWBOUNDS_DEFINE_ERROR(NoConvergence);
SKEWBOUNDS_DEFINE_ERROR(NotPSD);
SKEWBOUNDS_DEFINE_ERROR(NotPure);
SKEWBOUNDS_DEFINE_ERROR(ParamOutOfRange);
SKEWBOUNDS_DEFINE_ERROR(BlochVectorTooLong);
SKEWBOUNDS_DEFINE_ERROR(TooFewChannels);
SKEWBOUNDS_DEFINE_ERROR(SearchBudgetExceeded);
SKEWBOUNDS_DEFINE_ERROR(ParseError);
SKEWBOUNDS_DEFINE_ERROR(ValidationError);
SKEWBOUNDS_DEFINE_ERROR(IoError);

#undef SKEWBOUNDS_DEFINE_ERROR

} // namespace skewbounds
