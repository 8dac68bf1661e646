#pragma once

#include <stdexcept>
#include <string>

namespace h1cube {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define H1CUBE_DEFINE_ERROR(Name) \
    struct Name : Error {         \
        using Error::Error;       \
    }

H1CUBE_DEFINE_ERROR(InvalidInput);
H1CUBE_DEFINE_ERROR(InvalidPrimePower);
H1CUBE_DEFINE_ERROR(OrderCapExceeded);
H1CUBE_DEFINE_ERROR(NonFaithfulAction);
H1CUBE_DEFINE_ERROR(NotASubgroup);
H1CUBE_DEFINE_ERROR(GroupMismatch);
H1CUBE_DEFINE_ERROR(NonIntegralResult);
H1CUBE_DEFINE_ERROR(NegativeMultiplicity);
H1CUBE_DEFINE_ERROR(PrimeSearchFailed);
H1CUBE_DEFINE_ERROR(TableInconsistent);
H1CUBE_DEFINE_ERROR(TableUnavailable);
H1CUBE_DEFINE_ERROR(NonIntegralGenus);
H1CUBE_DEFINE_ERROR(GenusTooSmall);
H1CUBE_DEFINE_ERROR(TheoremViolation);
H1CUBE_DEFINE_ERROR(FingerprintMismatch);
H1CUBE_DEFINE_ERROR(ParseError);

#undef H1CUBE_DEFINE_ERROR

}  // namespace h1cube
