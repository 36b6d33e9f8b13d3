#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace baron
{
    /// A coin label is the weight (in grams) the Baron claims the coin has.
    using CoinLabel = int;

    enum class Relation
    {
        less,
        equal,
        greater
    };

    /// The relation seen when the pans of a weighing are exchanged.
    auto flip(Relation r) -> Relation;
    auto relation_symbol(Relation r) -> char;

    /// Raised when a weighing, scheme or assignment violates its invariants.
    class SchemeError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /**
     * One use of the balance: two disjoint coin sets and the claimed outcome
     * of comparing the left pan against the right pan.
     *
     * Pans are stored sorted ascending; construction rejects coins repeated
     * within or across pans and weighings with nothing on either pan.
     */
    class Weighing
    {
    public:
        Weighing(std::vector<CoinLabel> left, std::vector<CoinLabel> right, Relation outcome);

        auto left() const -> std::span<const CoinLabel> { return _left; }
        auto right() const -> std::span<const CoinLabel> { return _right; }
        auto outcome() const -> Relation { return _outcome; }

        /// Same coins with the pans exchanged and the relation flipped.
        auto swapped() const -> Weighing;
        auto with_outcome(Relation r) const -> Weighing;

        auto operator<=>(const Weighing &) const = default;

    private:
        std::vector<CoinLabel> _left;
        std::vector<CoinLabel> _right;
        Relation _outcome;
    };

    /// An ordered list of weighings over the coins [1..n].
    class Scheme
    {
    public:
        explicit Scheme(int n, std::vector<Weighing> weighings = {});

        auto n() const -> int { return _n; }
        auto weighings() const & -> std::span<const Weighing> { return _weighings; }
        auto weighings() const && -> std::span<const Weighing> = delete; // would dangle
        auto size() const -> std::size_t { return _weighings.size(); }

        auto operator<=>(const Scheme &) const = default;

    private:
        int _n;
        std::vector<Weighing> _weighings;
    };

    /// Bijection from coin labels [1..n] to true weights [1..n].
    class Assignment
    {
    public:
        explicit Assignment(std::vector<int> weight_of);

        static auto identity(int n) -> Assignment;
        /// Identity except that coins a and b trade weights.
        static auto transposition(int n, CoinLabel a, CoinLabel b) -> Assignment;

        auto n() const -> int { return static_cast<int>(_weight_of.size()); }
        auto weight_of(CoinLabel c) const -> int { return _weight_of[c - 1]; }
        auto weights() const -> std::span<const int> { return _weight_of; }
        auto is_identity() const -> bool;

        auto operator<=>(const Assignment &) const = default;

    private:
        std::vector<int> _weight_of;
    };

    auto evaluate_weighing(const Assignment & a, const Weighing & w) -> Relation;
    auto is_consistent(const Assignment & a, const Scheme & s) -> bool;

    /// The weighing over the given pans with its outcome read off the true (identity) weights.
    auto make_weighing(std::vector<CoinLabel> left, std::vector<CoinLabel> right) -> Weighing;

    auto to_string(const Assignment & a) -> std::string;
}
