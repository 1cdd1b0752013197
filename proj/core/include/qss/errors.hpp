#pragma once

#include <stdexcept>
#include <string>

namespace qss {

// Base class for all errors raised by the library. Validation routines never
// throw; they return reports. Exceptions are reserved for contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QSS_DEFINE_ERROR(Name)             \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

QSS_DEFINE_ERROR(ComplexInvalid);
QSS_DEFINE_ERROR(ShapeMismatch);
QSS_DEFINE_ERROR(InvalidComplex);
QSS_DEFINE_ERROR(EmptyVertexSet);
QSS_DEFINE_ERROR(InvalidGroup);
QSS_DEFINE_ERROR(InvalidAction);
QSS_DEFINE_ERROR(NotTransitiveEnough);
QSS_DEFINE_ERROR(MissingData);
QSS_DEFINE_ERROR(BudgetExceeded);
QSS_DEFINE_ERROR(IndexOutOfRange);

#undef QSS_DEFINE_ERROR

}  // namespace qss
