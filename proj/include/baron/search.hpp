#pragma once

#include <baron/model.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace baron
{
    enum class Pan : std::uint8_t
    {
        out,
        left,
        right
    };

    /**
     * Where every coin goes in one weighing. Canonical placements put the
     * lowest-labelled weighed coin on the left pan, which picks one of each
     * pan-swapped pair. Atoms are ordered by the base-3 number whose digits
     * (out = 0, left = 1, right = 2) are the placements of coins 1..n.
     */
    struct DesignAtom
    {
        std::vector<Pan> placement; // placement[c - 1]
        bool canonical = false;

        auto weighing() const -> Weighing; // outcome from the true weights

        auto operator<=>(const DesignAtom &) const = default;
    };

    struct DesignOptions
    {
        /// Also emit weighings with one empty pan.
        bool allow_one_sided = false;
    };

    /// Every canonical atom over n coins, in ascending order.
    auto canonical_atoms(int n, const DesignOptions & options = {}) -> std::vector<DesignAtom>;

    /// Pan-swap representative of any placement.
    auto canonicalize(std::vector<Pan> placement) -> DesignAtom;

    /**
     * Streams every set of k distinct canonical atoms, as a scheme of k
     * weighings in ascending atom order with outcomes read off the true
     * weights. Stops early when visit returns false.
     */
    auto enumerate_designs(int n, int k, const DesignOptions & options, const std::function<bool(const Scheme &)> & visit) -> void;

    struct SearchOptions
    {
        unsigned jobs = 1;
        bool allow_one_sided = false;
        /// Give up after exhausting this many weighings.
        int max_k = 6;
        std::optional<std::chrono::duration<double>> time_limit;
        /// Receives one line per finished level.
        std::function<void(const std::string &)> progress;
    };

    struct SearchOutcome
    {
        int n = 0;
        int a_of_n = 0;
        Scheme witness{1};
        /// Complete designs handed to the verifier, over all levels.
        std::uint64_t designs_examined = 0;
    };

    /// The search stopped before settling a(n); everything below lower_bound was exhausted.
    class SearchBudgetExhausted : public std::runtime_error
    {
    public:
        SearchBudgetExhausted(int lower_bound, const std::string & why);

        auto lower_bound() const -> int { return _lower_bound; }

    private:
        int _lower_bound;
    };

    /**
     * a(n) by iterative deepening from ceil(log3 n). Each level scans every
     * design that gives all coins distinct placement sequences; the witness
     * is the first identifying design in atom order, for any job count.
     */
    auto compute_omni(int n, const SearchOptions & options = {}) -> SearchOutcome;
}
