#pragma once

#include <stdexcept>
#include <string>

namespace tiltcara {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define TILTCARA_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
  public:                                    \
    using Error::Error;                      \
  }

// series engine
TILTCARA_DEFINE_ERROR(InvalidSeries);
TILTCARA_DEFINE_ERROR(DivisionByNearZeroConstantTerm);
TILTCARA_DEFINE_ERROR(NonzeroInnerConstant);
TILTCARA_DEFINE_ERROR(BadBranchAnchor);
TILTCARA_DEFINE_ERROR(OutsideEvaluationRadius);

// class machinery
TILTCARA_DEFINE_ERROR(InvalidTilt);
TILTCARA_DEFINE_ERROR(InvalidMeasure);
TILTCARA_DEFINE_ERROR(InvalidGrid);
TILTCARA_DEFINE_ERROR(TiltMismatch);
TILTCARA_DEFINE_ERROR(TiltSumOutOfRange);

// bounds
TILTCARA_DEFINE_ERROR(RadiusOutOfRange);
TILTCARA_DEFINE_ERROR(NoAttainment);

// search
TILTCARA_DEFINE_ERROR(UnknownBound);

// applications
TILTCARA_DEFINE_ERROR(NotNormalized);
TILTCARA_DEFINE_ERROR(NotSpirallike);
TILTCARA_DEFINE_ERROR(NonConvergence);
TILTCARA_DEFINE_ERROR(InvalidParameter);
TILTCARA_DEFINE_ERROR(VanishingDerivative);

#undef TILTCARA_DEFINE_ERROR

}  // namespace tiltcara
