#pragma once

#include <optional>

namespace baron
{
    struct BoundsReport
    {
        int n = 0;
        /// ceil(log3 n): fewer weighings leave two coins with identical placements.
        int natural_lower = 0;
        /// ceil(log3(3n/8)) + 1. Holds only if some optimal scheme contains a
        /// weighing that balances (or misses by one gram) with every left coin
        /// lighter than every right coin. Not a proven bound.
        int conditional_lower = 0;
        int trivial_upper = 0;
        int binary_upper = 0;
        int refined_upper = 0;
        std::optional<int> known_exact;
    };

    auto bounds_for(int n) -> BoundsReport;

    /// Smallest k >= 0 with 2^k >= n.
    auto ceil_log2(long long n) -> int;
    /// Smallest k >= 0 with 3^k >= n.
    auto ceil_log3(long long n) -> int;
    /// Smallest k >= 0 with (1/alpha)^k >= n where alpha = sqrt(6) - 2, decided exactly.
    auto ceil_log_inverse_alpha(long long n) -> int;

    /// Published exact values of a(n), if any.
    auto known_value(int n) -> std::optional<int>;
}
