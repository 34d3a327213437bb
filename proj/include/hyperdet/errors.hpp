#pragma once

#include <stdexcept>
#include <string>

namespace hyperdet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HYPERDET_DEFINE_ERROR(Name) \
  struct Name : Error {             \
    using Error::Error;             \
  };

// polynomial layer
HYPERDET_DEFINE_ERROR(DegreeError)
HYPERDET_DEFINE_ERROR(ConstantError)
HYPERDET_DEFINE_ERROR(LeadingCoeffError)
HYPERDET_DEFINE_ERROR(NotRealRooted)

// certification layer
HYPERDET_DEFINE_ERROR(BasePointError)

// intersection layer
HYPERDET_DEFINE_ERROR(CommonFactorError)
HYPERDET_DEFINE_ERROR(BezoutDeficitError)
HYPERDET_DEFINE_ERROR(NotRealContactError)
HYPERDET_DEFINE_ERROR(DetMismatchError)
HYPERDET_DEFINE_ERROR(MultiplicityEstimateError)

// contact-matrix construction
HYPERDET_DEFINE_ERROR(DimensionError)
HYPERDET_DEFINE_ERROR(ContainmentError)
HYPERDET_DEFINE_ERROR(NoetherResidualError)
HYPERDET_DEFINE_ERROR(DivisionResidualError)
HYPERDET_DEFINE_ERROR(DegenerateError)
HYPERDET_DEFINE_ERROR(DetMisfitError)
HYPERDET_DEFINE_ERROR(SingularInputError)
HYPERDET_DEFINE_ERROR(HyperbolicityLostError)

// pencil layer
HYPERDET_DEFINE_ERROR(NotHermitianError)
HYPERDET_DEFINE_ERROR(ZeroVectorError)

#undef HYPERDET_DEFINE_ERROR

}  // namespace hyperdet
