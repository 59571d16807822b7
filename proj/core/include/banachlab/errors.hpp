#pragma once

#include <stdexcept>
#include <string>

namespace banachlab {

// Base class for every failure the library reports deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define BANACHLAB_DEFINE_ERROR(Name)      \
  struct Name : Error {                   \
    using Error::Error;                   \
  };

// Construction / representation problems.
BANACHLAB_DEFINE_ERROR(InconsistentDimensions)
BANACHLAB_DEFINE_ERROR(NotAssociative)
BANACHLAB_DEFINE_ERROR(NotSubmultiplicative)
BANACHLAB_DEFINE_ERROR(AlgebraMismatch)
BANACHLAB_DEFINE_ERROR(UnsupportedNormKind)
BANACHLAB_DEFINE_ERROR(NotIsometricRegularRep)
BANACHLAB_DEFINE_ERROR(PowerIterationStalled)

// Inversion / resolvents.
BANACHLAB_DEFINE_ERROR(Singular)
BANACHLAB_DEFINE_ERROR(NormTooLarge)

// States and numerical ranges.
BANACHLAB_DEFINE_ERROR(NonConvergent)
BANACHLAB_DEFINE_ERROR(UnsupportedStateFamily)

// Fractional powers and transforms.
BANACHLAB_DEFINE_ERROR(NotInF)
BANACHLAB_DEFINE_ERROR(NotAccretive)
BANACHLAB_DEFINE_ERROR(TolNotReached)
BANACHLAB_DEFINE_ERROR(NotCommuting)

// Ideals, support idempotents, factorization.
BANACHLAB_DEFINE_ERROR(RouteDisagreement)
BANACHLAB_DEFINE_ERROR(NotPseudoInvertible)
BANACHLAB_DEFINE_ERROR(PoolExhausted)
BANACHLAB_DEFINE_ERROR(NotCommutative)
BANACHLAB_DEFINE_ERROR(SpanMismatch)

// M-ideals and lifting.
BANACHLAB_DEFINE_ERROR(MPropertyViolated)
BANACHLAB_DEFINE_ERROR(SupportNotIdempotent)
BANACHLAB_DEFINE_ERROR(AlphaNotInterior)
BANACHLAB_DEFINE_ERROR(EmptyInterior)
BANACHLAB_DEFINE_ERROR(NotQuotientRealPositive)

// CLI / serialization.
BANACHLAB_DEFINE_ERROR(IoError)

#undef BANACHLAB_DEFINE_ERROR

}  // namespace banachlab
