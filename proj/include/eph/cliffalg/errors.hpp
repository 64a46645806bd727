#pragma once

#include <stdexcept>

namespace eph::cliff {

class CliffordError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define EPH_CLIFF_ERROR(Name)                                                  \
  class Name : public CliffordError {                                          \
  public:                                                                      \
    using CliffordError::CliffordError;                                        \
  };

EPH_CLIFF_ERROR(IndexOutOfRange)
EPH_CLIFF_ERROR(MetricMismatch)
EPH_CLIFF_ERROR(LengthMismatch)
EPH_CLIFF_ERROR(NonScalarSquare)
EPH_CLIFF_ERROR(NegativeNormSquare)
EPH_CLIFF_ERROR(ZeroNorm)
EPH_CLIFF_ERROR(NotAVector)
EPH_CLIFF_ERROR(NotScalar)

#undef EPH_CLIFF_ERROR

} // namespace eph::cliff
