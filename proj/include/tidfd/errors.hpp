#pragma once

#include <stdexcept>
#include <string>

namespace tidfd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TIDFD_DEFINE_ERROR(Name)             \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

TIDFD_DEFINE_ERROR(InvalidSignal);
TIDFD_DEFINE_ERROR(SymmetryViolation);
TIDFD_DEFINE_ERROR(SizeMismatch);
TIDFD_DEFINE_ERROR(LabelMismatch);
TIDFD_DEFINE_ERROR(DegenerateFrame);
TIDFD_DEFINE_ERROR(BadScaleRange);
TIDFD_DEFINE_ERROR(NonDyadicBank);
TIDFD_DEFINE_ERROR(StrideMismatch);
TIDFD_DEFINE_ERROR(DomainViolation);
TIDFD_DEFINE_ERROR(SingularMultiplier);
TIDFD_DEFINE_ERROR(UnboundedVaguelette);
TIDFD_DEFINE_ERROR(DualMismatch);
TIDFD_DEFINE_ERROR(BadAlpha);
TIDFD_DEFINE_ERROR(BandOverlap);
TIDFD_DEFINE_ERROR(UnknownKind);
TIDFD_DEFINE_ERROR(ConfigError);

#undef TIDFD_DEFINE_ERROR

}  // namespace tidfd
