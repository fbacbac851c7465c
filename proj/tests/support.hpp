#pragma once

#include "hallforge/error.hpp"

#include <optional>

// Error code raised by f, or nullopt when it returns normally.
template <class F>
std::optional<hallforge::ErrorCode> error_of(F&& f)
{
    try {
        f();
    } catch (const hallforge::Error& e) {
        return e.code();
    }
    return std::nullopt;
}
