#pragma once

#include <stdexcept>
#include <string>

namespace skewhook {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input (bad partition, bad JSON, bad filter, ...).
class InputError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these on valid input
/// means a bug in the library, not in the caller's data.
class InternalError : public Error {
public:
  using Error::Error;
};

#define SKEWHOOK_DEFINE_ERROR(Name, Base)                                      \
  class Name : public Base {                                                   \
  public:                                                                      \
    using Base::Base;                                                          \
  };

SKEWHOOK_DEFINE_ERROR(CycleDetected, InputError)
SKEWHOOK_DEFINE_ERROR(TooManyElements, InputError)
SKEWHOOK_DEFINE_ERROR(InvalidPartition, InputError)
SKEWHOOK_DEFINE_ERROR(InvalidStrictPartition, InputError)
SKEWHOOK_DEFINE_ERROR(NotATree, InputError)
SKEWHOOK_DEFINE_ERROR(NotAFilter, InputError)
SKEWHOOK_DEFINE_ERROR(ColoringFailed, InputError)
SKEWHOOK_DEFINE_ERROR(NonReducedInput, InputError)
SKEWHOOK_DEFINE_ERROR(NotActive, InputError)
SKEWHOOK_DEFINE_ERROR(NotKExcited, InputError)
SKEWHOOK_DEFINE_ERROR(NonExpandableFactor, InputError)
SKEWHOOK_DEFINE_ERROR(ZeroHookForm, InputError)

SKEWHOOK_DEFINE_ERROR(MultipleDkTops, InternalError)
SKEWHOOK_DEFINE_ERROR(NegativeExponent, InternalError)
SKEWHOOK_DEFINE_ERROR(PeakMismatch, InternalError)
SKEWHOOK_DEFINE_ERROR(NonIntegerResult, InternalError)

#undef SKEWHOOK_DEFINE_ERROR

} // namespace skewhook
