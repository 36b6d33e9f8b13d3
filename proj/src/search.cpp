#include <baron/search.hpp>

#include <baron/bounds.hpp>
#include <baron/verifier.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace baron
{
    SearchBudgetExhausted::SearchBudgetExhausted(int lower_bound, const std::string & why) :
        std::runtime_error(why + "; a(n) >= " + std::to_string(lower_bound)),
        _lower_bound(lower_bound)
    {
    }

    auto DesignAtom::weighing() const -> Weighing
    {
        std::vector<CoinLabel> left, right;
        for (std::size_t i = 0; i < placement.size(); ++i) {
            if (placement[i] == Pan::left)
                left.push_back(static_cast<CoinLabel>(i + 1));
            else if (placement[i] == Pan::right)
                right.push_back(static_cast<CoinLabel>(i + 1));
        }
        return make_weighing(std::move(left), std::move(right));
    }

    auto canonicalize(std::vector<Pan> placement) -> DesignAtom
    {
        auto first = std::ranges::find_if(placement, [](Pan p) { return p != Pan::out; });
        if (first != placement.end() && *first == Pan::right)
            for (auto & p : placement)
                p = p == Pan::left ? Pan::right : p == Pan::right ? Pan::left : Pan::out;
        return {std::move(placement), true};
    }

    auto canonical_atoms(int n, const DesignOptions & options) -> std::vector<DesignAtom>
    {
        if (n < 1 || n > 16)
            throw std::invalid_argument("design enumeration supports 1 <= n <= 16");

        std::vector<DesignAtom> atoms;
        std::vector<Pan> p(n, Pan::out);
        // Counting in base 3 with coin 1 as the most significant digit gives ascending order.
        while (true) {
            bool has_left = std::ranges::count(p, Pan::left) > 0;
            bool has_right = std::ranges::count(p, Pan::right) > 0;
            auto first = std::ranges::find_if(p, [](Pan x) { return x != Pan::out; });
            bool canonical = first != p.end() && *first == Pan::left;
            if (canonical && (has_right || options.allow_one_sided) && has_left)
                atoms.push_back({p, true});

            int i = n - 1;
            while (i >= 0 && p[i] == Pan::right)
                p[i--] = Pan::out;
            if (i < 0)
                break;
            p[i] = static_cast<Pan>(static_cast<int>(p[i]) + 1);
        }
        return atoms;
    }

    auto enumerate_designs(int n, int k, const DesignOptions & options, const std::function<bool(const Scheme &)> & visit) -> void
    {
        if (k < 0)
            throw std::invalid_argument("k must be non-negative");
        auto atoms = canonical_atoms(n, options);
        std::vector<Weighing> weighings;
        for (const auto & a : atoms)
            weighings.push_back(a.weighing());

        std::vector<std::size_t> pick;
        std::function<bool(std::size_t)> extend = [&](std::size_t from) {
            if (static_cast<int>(pick.size()) == k) {
                std::vector<Weighing> ws;
                for (auto i : pick)
                    ws.push_back(weighings[i]);
                return visit(Scheme{n, std::move(ws)});
            }
            for (auto i = from; i < atoms.size(); ++i) {
                pick.push_back(i);
                bool more = extend(i + 1);
                pick.pop_back();
                if (! more)
                    return false;
            }
            return true;
        };
        extend(0);
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        /**
         * One level of the search. Work units are first atoms; a unit is
         * abandoned once an earlier unit holds a witness, so the smallest unit
         * with a witness always finishes and the result is independent of
         * scheduling.
         */
        class LevelSearch
        {
        public:
            LevelSearch(int n, int k, const std::vector<DesignAtom> & atoms, std::optional<Clock::time_point> deadline) :
                _n(n),
                _k(k),
                _deadline(deadline),
                _best_unit(atoms.size())
            {
                for (const auto & a : atoms) {
                    _weighings.push_back(a.weighing());
                    std::vector<int> digits;
                    for (auto p : a.placement)
                        digits.push_back(static_cast<int>(p));
                    _digits.push_back(std::move(digits));
                }
                _capacity.assign(k + 1, 1);
                for (int r = k - 1; r >= 0; --r)
                    _capacity[r] = _capacity[r + 1] * 3;
            }

            auto run(unsigned jobs) -> std::optional<Scheme>
            {
                std::vector<std::thread> pool;
                for (unsigned j = 0; j < std::max(1u, jobs); ++j)
                    pool.emplace_back([this] { work(); });
                for (auto & t : pool)
                    t.join();
                if (_error)
                    std::rethrow_exception(_error);
                if (_timed_out)
                    throw SearchBudgetExhausted(_k, "time limit reached while scanning " + std::to_string(_k) + " weighings");
                return _witness;
            }

            auto designs_examined() const -> std::uint64_t { return _examined.load(); }

        private:
            struct Worker
            {
                std::vector<std::size_t> pick;
                std::vector<long long> signature; // per coin, base-3 history of placements
                std::uint64_t examined = 0;
                std::uint64_t ticks = 0;
            };

            auto work() -> void
            {
                Worker w;
                w.signature.assign(_n, 0);
                try {
                    while (true) {
                        auto unit = _next_unit.fetch_add(1);
                        if (unit >= _weighings.size() || unit > _best_unit.load() || _stop.load())
                            break;
                        w.pick.assign(1, unit);
                        apply(w, unit, +1);
                        std::optional<Scheme> found;
                        if (admissible(w, 1))
                            found = extend(w, unit, unit + 1);
                        apply(w, unit, -1);
                        if (found) {
                            std::lock_guard lock(_mutex);
                            if (unit < _best_unit.load()) {
                                _best_unit = unit;
                                _witness = std::move(found);
                            }
                        }
                    }
                }
                catch (...) {
                    std::lock_guard lock(_mutex);
                    if (! _error)
                        _error = std::current_exception();
                    _stop = true;
                }
                _examined += w.examined;
            }

            auto apply(Worker & w, std::size_t atom, int direction) -> void
            {
                for (int c = 0; c < _n; ++c) {
                    if (direction > 0)
                        w.signature[c] = w.signature[c] * 3 + _digits[atom][c];
                    else
                        w.signature[c] = (w.signature[c] - _digits[atom][c]) / 3;
                }
            }

            // Coins sharing a placement history can only be told apart by the
            // remaining weighings, which separate at most 3^remaining of them.
            auto admissible(Worker & w, int depth) -> bool
            {
                auto sorted = w.signature;
                std::ranges::sort(sorted);
                long long run = 1;
                for (std::size_t i = 1; i < sorted.size(); ++i) {
                    run = sorted[i] == sorted[i - 1] ? run + 1 : 1;
                    if (run > _capacity[depth])
                        return false;
                }
                return true;
            }

            auto extend(Worker & w, std::size_t unit, std::size_t from) -> std::optional<Scheme>
            {
                if (static_cast<int>(w.pick.size()) == _k) {
                    std::vector<Weighing> ws;
                    for (auto i : w.pick)
                        ws.push_back(_weighings[i]);
                    Scheme s{_n, std::move(ws)};
                    ++w.examined;
                    if (identifies_all(s))
                        return s;
                    return std::nullopt;
                }
                for (auto i = from; i < _weighings.size(); ++i) {
                    if ((++w.ticks & 0xfff) == 0 && ! keep_going(unit))
                        return std::nullopt;
                    w.pick.push_back(i);
                    apply(w, i, +1);
                    std::optional<Scheme> found;
                    if (admissible(w, static_cast<int>(w.pick.size())))
                        found = extend(w, unit, i + 1);
                    apply(w, i, -1);
                    w.pick.pop_back();
                    if (found)
                        return found;
                }
                return std::nullopt;
            }

            auto keep_going(std::size_t unit) -> bool
            {
                if (_stop.load() || unit > _best_unit.load())
                    return false;
                if (_deadline && Clock::now() > *_deadline) {
                    _timed_out = true;
                    _stop = true;
                    return false;
                }
                return true;
            }

            int _n;
            int _k;
            std::optional<Clock::time_point> _deadline;
            std::vector<Weighing> _weighings;
            std::vector<std::vector<int>> _digits;
            std::vector<long long> _capacity; // 3^(k - depth)

            std::atomic<std::size_t> _next_unit{0};
            std::atomic<std::size_t> _best_unit;
            std::atomic<std::uint64_t> _examined{0};
            std::atomic<bool> _stop{false};
            std::atomic<bool> _timed_out{false};
            std::mutex _mutex;
            std::optional<Scheme> _witness;
            std::exception_ptr _error;
        };
    }

    auto compute_omni(int n, const SearchOptions & options) -> SearchOutcome
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");

        auto start = Clock::now();
        std::optional<Clock::time_point> deadline;
        if (options.time_limit)
            deadline = start + std::chrono::duration_cast<Clock::duration>(*options.time_limit);

        SearchOutcome outcome;
        outcome.n = n;

        auto first_k = ceil_log3(n);
        if (first_k == 0) {
            // A single coin needs no weighing.
            outcome.a_of_n = 0;
            outcome.witness = Scheme{n};
            outcome.designs_examined = 1;
            return outcome;
        }

        auto atoms = canonical_atoms(n, {options.allow_one_sided});
        for (int k = first_k; k <= options.max_k; ++k) {
            LevelSearch level(n, k, atoms, deadline);
            auto witness = level.run(options.jobs);
            outcome.designs_examined += level.designs_examined();

            if (options.progress) {
                std::ostringstream line;
                line << "omni n=" << n << " k=" << k << (witness ? " witness" : " exhausted")
                     << " designs=" << level.designs_examined()
                     << " elapsed=" << std::chrono::duration<double>(Clock::now() - start).count() << "s";
                options.progress(line.str());
            }
            if (witness) {
                outcome.a_of_n = k;
                outcome.witness = std::move(*witness);
                return outcome;
            }
        }
        throw SearchBudgetExhausted(std::max(first_k, options.max_k + 1), "no design with at most " + std::to_string(options.max_k) + " weighings identifies all coins");
    }
}
