#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hallforge {

enum class ErrorCode {
    NonPrime,
    DegreeZero,
    FieldTooLarge,
    DivideByZero,
    DimensionError,
    NotAdmissible,
    InfiniteDimensional,
    UnknownPreset,
    RelationViolated,
    MixedContext,
    Undecidable,
    ZeroModule,
    NotInCatalog,
    NotIndecomposable,
    NotConservative,
    BudgetExceeded,
    CharacteristicMismatch,
    NotPrimeBase,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (notably the CLI exit-code mapping) can dispatch without parsing
/// messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hallforge
