#pragma once

#include <baron/model.hpp>

#include <functional>
#include <stdexcept>
#include <vector>

namespace baron
{
    /// A constructive procedure could not produce a legal scheme.
    class ConstructionError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// Coins proven by the helper weighings: 1, 2, 4, ..., 2^(ceil(log2 n) - 1) and n.
    struct HelperSet
    {
        int n = 0;
        std::vector<CoinLabel> coins; // ascending
        int weighings_used = 0;
    };

    struct HelperScheme
    {
        Scheme scheme;
        HelperSet helpers;
    };

    /// Closed interval of weights; a group is the non-helper coins inside it.
    struct Range
    {
        int lo = 0;
        int hi = 0;

        auto operator<=>(const Range &) const = default;
    };

    /// Ordered, disjoint groups of non-helper coins the audience can tell apart.
    struct RangePartition
    {
        std::vector<Range> groups;
    };

    struct SplitStats
    {
        /// Dividing rounds performed after the helper weighings.
        int rounds = 0;
        /// Rounds whose imbalance could not be settled by a single weighing.
        int split_rounds = 0;
        /// Weighings beyond one per round.
        int extra_weighings = 0;
        /// Groups whose heavy part was shrunk by one coin to keep the round settleable.
        int light_groups = 0;
    };

    struct SplitResult
    {
        Scheme scheme;
        SplitStats stats;
        /// Partition of the non-helper coins after each round.
        std::vector<RangePartition> trace;
    };

    /// 1 < 2, 2 < 3, ..., (n-1) < n.
    auto generate_trivial(int n) -> Scheme;

    /**
     * The chain 1 < 2, 1+2 < 4, ..., then the binary expansion of n-1 against n.
     * Uses exactly ceil(log2 n) weighings and proves every coin of the helper set.
     */
    auto generate_helper(int n) -> HelperScheme;

    /// Helper coins summing to `amount`, chosen greedily from the largest. Empty for 0.
    auto helper_subset(long long amount, const std::vector<CoinLabel> & helpers) -> std::vector<CoinLabel>;

    /**
     * Helper weighings followed by rounds that halve every undivided group:
     * the small halves go on the left, the heaviest remaining coins go on the
     * right until it outweighs the left, and helper coins settle the
     * difference on the left. At most 2 ceil(log2 n) weighings.
     */
    auto generate_binary(int n) -> Scheme;
    auto generate_binary_traced(int n) -> SplitResult;

    /// len(generate_binary(n)), by the same construction without listing the coins of each weighing.
    auto binary_weighing_count(int n) -> int;

    /**
     * Like generate_binary, but every group is split three ways: its lightest
     * ceil(alpha * width) coins, its smallest sufficient heaviest tail, and
     * the middle, with alpha = sqrt(6) - 2.
     */
    auto generate_refined(int n) -> Scheme;
    auto generate_refined_traced(int n) -> SplitResult;

    /// T_l = l(l+1)/2.
    constexpr auto triangular(long long l) -> long long { return l * (l + 1) / 2; }

    struct TriangularTriple
    {
        int a = 0;
        int b = 0;
        int c = 0;
        long long value = 0;

        auto operator<=>(const TriangularTriple &) const = default;
    };

    /**
     * Calls visit for each a <= b <= c with T_a + T_b + T_c = m, by descending
     * c, then descending b. Stops early when visit returns false.
     */
    auto for_each_triangular_decomposition(long long m, const std::function<bool(const TriangularTriple &)> & visit) -> void;

    /// All decompositions of m, in the order of for_each_triangular_decomposition.
    auto decompose_triangular(long long m) -> std::vector<TriangularTriple>;

    /**
     * At most seven weighings proving the weight of coin t. For n <= 8 this is
     * the shortest prefix of generate_binary(n) that pins t.
     */
    auto generate_particular_coin(int n, CoinLabel t) -> Scheme;
}
