#pragma once
#include <stdexcept>
#include <string>

namespace welsch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact_algebra
struct InconsistentSamples : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };

// arc_jets
struct NotSmooth : Error { using Error::Error; };

// plane_curves
struct PositiveDimensionalSingularLocus : Error { using Error::Error; };
struct NotSingular : Error { using Error::Error; };
struct DegenerateNode : Error { using Error::Error; };

// tropical_limit
struct ZeroSeries : Error { using Error::Error; };
struct UndeterminedCoefficient : Error { using Error::Error; };
struct FaceNotInSubdivision : Error { using Error::Error; };

// triangle_count
struct NonGenericCoefficients : Error { using Error::Error; };
struct DegenerateDoubleRoot : NonGenericCoefficients { using NonGenericCoefficients::NonGenericCoefficients; };

// invariant_engine: everything a resampling caller should catch derives from
// NonGenericConfiguration.
struct NonGenericConfiguration : Error { using Error::Error; };
struct RankDeficient : NonGenericConfiguration { using NonGenericConfiguration::NonGenericConfiguration; };
struct IdenticallySingularPencil : NonGenericConfiguration {
    using NonGenericConfiguration::NonGenericConfiguration;
};

// input validation (CLI exit code 1)
struct SchemaError : Error { using Error::Error; };
struct BalanceViolation : SchemaError { using SchemaError::SchemaError; };

// harness
struct IncompatibleSignatures : SchemaError { using SchemaError::SchemaError; };

}  // namespace welsch
