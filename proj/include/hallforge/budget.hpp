#pragma once

#include <cstdint>

namespace hallforge {

/// Caps on exhaustive searches. Exceeding one raises BudgetExceeded (or
/// Undecidable for the idempotent search) instead of running unbounded.
struct Budgets {
    /// Candidate tuples per dimension vector when listing indecomposables,
    /// and candidate subspace tuples per Hall table.
    std::uint64_t candidates = 10'000'000;
    /// Endomorphisms tried by the exhaustive idempotent search.
    std::uint64_t idempotent_search = 1'000'000;

    /// Defaults, with `candidates` overridden by HALLFORGE_BUDGET when set.
    static Budgets from_env();
};

} // namespace hallforge
