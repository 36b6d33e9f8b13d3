#pragma once

#include <baron/model.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace baron
{
    inline constexpr std::uint64_t default_node_cap = 1'000'000'000;

    /// Exhaustive verification gave up after visiting its node budget.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        explicit BudgetExceeded(std::uint64_t nodes);

        auto nodes() const -> std::uint64_t { return _nodes; }

    private:
        std::uint64_t _nodes;
    };

    struct VerifyReport
    {
        /// Number of consistent assignments, saturated at the requested limit.
        std::uint64_t consistent_count = 0;
        bool unique = false;
        bool identity_consistent = false;
        /// Lexicographically smallest consistent assignment other than the identity.
        std::optional<Assignment> second_witness;
        std::uint64_t nodes_explored = 0;
    };

    struct CoinVerifyReport
    {
        CoinLabel target = 0;
        bool pinned = false;
        /// Lexicographically smallest consistent assignment moving the target.
        std::optional<Assignment> counterexample;
        std::uint64_t nodes_explored = 0;
    };

    /**
     * Counts the assignments consistent with every weighing of the scheme,
     * stopping once limit of them have been found. The count is exact below
     * the limit. Throws BudgetExceeded when more than node_cap search nodes
     * are needed; never reports uniqueness it has not proven.
     *
     * Supports at most 64 coins.
     */
    auto count_consistent(const Scheme & s, std::uint64_t limit, std::uint64_t node_cap = default_node_cap) -> VerifyReport;

    /// The identity is the one and only consistent assignment.
    auto identifies_all(const Scheme & s, std::uint64_t node_cap = default_node_cap) -> bool;

    /// Every consistent assignment gives coin t the weight t.
    auto identifies_coin(const Scheme & s, CoinLabel t, std::uint64_t node_cap = default_node_cap) -> CoinVerifyReport;

    /// Labels ordered by descending number of appearances, ties by descending label.
    auto branching_order(const Scheme & s) -> std::vector<CoinLabel>;
}
