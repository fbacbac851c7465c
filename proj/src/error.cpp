#include "hallforge/error.hpp"

namespace hallforge {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivideByZero: return "DivideByZero";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::MixedContext: return "MixedContext";
    case ErrorCode::Undecidable: return "Undecidable";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::NotConservative: return "NotConservative";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::NotPrimeBase: return "NotPrimeBase";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace hallforge
