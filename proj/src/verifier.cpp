#include <baron/verifier.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>

namespace baron
{
    BudgetExceeded::BudgetExceeded(std::uint64_t nodes) :
        std::runtime_error("verification exceeded its budget of " + std::to_string(nodes) + " nodes"),
        _nodes(nodes)
    {
    }

    namespace
    {
        struct Membership
        {
            int weighing;
            int sign; // +1 left pan, -1 right pan
        };

        struct PanState
        {
            long long diff = 0; // assigned left weight minus assigned right weight
            int open_left = 0;
            int open_right = 0;
            Relation claim = Relation::equal;
        };

        /**
         * Depth-first assignment of weights to labels in a fixed order. Each
         * weighing keeps its partial pan difference; a branch is cut once the
         * claimed relation is out of reach, where the reachable range of the
         * difference puts the smallest (or largest) remaining weights into
         * the open slots of each pan.
         */
        class ConsistencySearch
        {
        public:
            using Visitor = std::function<bool(const std::vector<int> &)>;

            ConsistencySearch(const Scheme & s, std::vector<CoinLabel> order, std::uint64_t node_cap) :
                _n(s.n()),
                _order(std::move(order)),
                _node_cap(node_cap),
                _members(s.n() + 1),
                _pans(s.size()),
                _weights(s.n() + 1, 0)
            {
                if (_n > 64)
                    throw SchemeError("exhaustive verification supports at most 64 coins");
                for (std::size_t i = 0; i < s.size(); ++i) {
                    const auto & w = s.weighings()[i];
                    _pans[i].claim = w.outcome();
                    _pans[i].open_left = static_cast<int>(w.left().size());
                    _pans[i].open_right = static_cast<int>(w.right().size());
                    for (auto c : w.left())
                        _members[c].push_back({static_cast<int>(i), +1});
                    for (auto c : w.right())
                        _members[c].push_back({static_cast<int>(i), -1});
                }
                _remaining = _n == 64 ? ~0ULL : ((1ULL << _n) - 1);
            }

            /// Forbids giving weight `weight` to coin `label`.
            auto forbid(CoinLabel label, int weight) -> void
            {
                _forbidden_label = label;
                _forbidden_weight = weight;
            }

            auto run(const Visitor & visit) -> void
            {
                _visit = &visit;
                if (feasible())
                    descend(0);
            }

            auto nodes() const -> std::uint64_t { return _nodes; }

        private:
            // Weight w is stored as bit w-1 of _remaining.
            auto feasible() -> bool
            {
                int r = 0;
                _prefix[0] = 0;
                for (auto bits = _remaining; bits; bits &= bits - 1) {
                    _prefix[r + 1] = _prefix[r] + std::countr_zero(bits) + 1;
                    ++r;
                }
                auto smallest = [&](int k) { return _prefix[k]; };
                auto largest = [&](int k) { return _prefix[r] - _prefix[r - k]; };

                for (const auto & p : _pans) {
                    switch (p.claim) {
                    case Relation::less:
                        if (p.diff + smallest(p.open_left) - largest(p.open_right) >= 0)
                            return false;
                        break;
                    case Relation::greater:
                        if (p.diff + largest(p.open_left) - smallest(p.open_right) <= 0)
                            return false;
                        break;
                    case Relation::equal:
                        if (p.diff + smallest(p.open_left) - largest(p.open_right) > 0)
                            return false;
                        if (p.diff + largest(p.open_left) - smallest(p.open_right) < 0)
                            return false;
                        break;
                    }
                }
                return true;
            }

            auto place(CoinLabel c, int weight, int direction) -> void
            {
                for (const auto & m : _members[c]) {
                    auto & p = _pans[m.weighing];
                    p.diff += direction * m.sign * weight;
                    (m.sign > 0 ? p.open_left : p.open_right) -= direction;
                }
            }

            auto descend(std::size_t depth) -> bool
            {
                if (depth == _order.size())
                    return (*_visit)(_weights);

                auto c = _order[depth];
                for (auto bits = _remaining; bits; bits &= bits - 1) {
                    int weight = std::countr_zero(bits) + 1;
                    if (c == _forbidden_label && weight == _forbidden_weight)
                        continue;
                    if (++_nodes > _node_cap)
                        throw BudgetExceeded(_node_cap);

                    auto bit = bits & (~bits + 1);
                    _remaining &= ~bit;
                    place(c, weight, +1);
                    _weights[c] = weight;

                    bool keep_going = true;
                    if (feasible())
                        keep_going = descend(depth + 1);

                    place(c, weight, -1);
                    _remaining |= bit;
                    if (! keep_going)
                        return false;
                }
                return true;
            }

            int _n;
            std::vector<CoinLabel> _order;
            std::uint64_t _node_cap;
            std::vector<std::vector<Membership>> _members;
            std::vector<PanState> _pans;
            std::vector<int> _weights; // indexed by label
            std::uint64_t _remaining = 0;
            std::array<long long, 65> _prefix{};
            std::uint64_t _nodes = 0;
            CoinLabel _forbidden_label = 0;
            int _forbidden_weight = 0;
            const Visitor * _visit = nullptr;
        };

        auto label_order(int n) -> std::vector<CoinLabel>
        {
            std::vector<CoinLabel> order(n);
            std::iota(order.begin(), order.end(), 1);
            return order;
        }

        auto to_assignment(const std::vector<int> & by_label) -> Assignment
        {
            return Assignment{std::vector<int>(by_label.begin() + 1, by_label.end())};
        }

        auto is_identity(const std::vector<int> & by_label) -> bool
        {
            for (std::size_t c = 1; c < by_label.size(); ++c)
                if (by_label[c] != static_cast<int>(c))
                    return false;
            return true;
        }

        auto count_impl(const Scheme & s, std::uint64_t limit, std::uint64_t node_cap, bool want_witness) -> VerifyReport
        {
            if (limit < 1)
                throw std::invalid_argument("count limit must be at least 1");

            VerifyReport report;
            report.identity_consistent = is_consistent(Assignment::identity(s.n()), s);

            ConsistencySearch counter(s, branching_order(s), node_cap);
            bool saw_other = false;
            counter.run([&](const std::vector<int> & w) {
                if (! is_identity(w))
                    saw_other = true;
                return ++report.consistent_count < limit;
            });
            report.nodes_explored = counter.nodes();
            report.unique = report.consistent_count == 1;

            if (want_witness && saw_other) {
                // Label order with ascending weights visits assignments lexicographically.
                ConsistencySearch lex(s, label_order(s.n()), node_cap - std::min(node_cap, report.nodes_explored));
                lex.run([&](const std::vector<int> & w) {
                    if (is_identity(w))
                        return true;
                    report.second_witness = to_assignment(w);
                    return false;
                });
                report.nodes_explored += lex.nodes();
            }
            return report;
        }
    }

    auto branching_order(const Scheme & s) -> std::vector<CoinLabel>
    {
        std::vector<int> uses(s.n() + 1, 0);
        for (const auto & w : s.weighings()) {
            for (auto c : w.left())
                ++uses[c];
            for (auto c : w.right())
                ++uses[c];
        }
        auto order = label_order(s.n());
        std::ranges::sort(order, [&](CoinLabel a, CoinLabel b) {
            return uses[a] != uses[b] ? uses[a] > uses[b] : a > b;
        });
        return order;
    }

    auto count_consistent(const Scheme & s, std::uint64_t limit, std::uint64_t node_cap) -> VerifyReport
    {
        return count_impl(s, limit, node_cap, true);
    }

    auto identifies_all(const Scheme & s, std::uint64_t node_cap) -> bool
    {
        auto report = count_impl(s, 2, node_cap, false);
        return report.unique && report.identity_consistent;
    }

    auto identifies_coin(const Scheme & s, CoinLabel t, std::uint64_t node_cap) -> CoinVerifyReport
    {
        if (t < 1 || t > s.n())
            throw std::invalid_argument("target coin " + std::to_string(t) + " is outside [1.." + std::to_string(s.n()) + "]");

        CoinVerifyReport report;
        report.target = t;

        auto order = branching_order(s);
        std::erase(order, t);
        order.insert(order.begin(), t);

        ConsistencySearch probe(s, std::move(order), node_cap);
        probe.forbid(t, t);
        bool moved = false;
        probe.run([&](const std::vector<int> &) {
            moved = true;
            return false;
        });
        report.nodes_explored = probe.nodes();
        report.pinned = ! moved;

        if (moved) {
            ConsistencySearch lex(s, label_order(s.n()), node_cap - std::min(node_cap, report.nodes_explored));
            lex.forbid(t, t);
            lex.run([&](const std::vector<int> & w) {
                report.counterexample = to_assignment(w);
                return false;
            });
            report.nodes_explored += lex.nodes();
        }
        return report;
    }
}
