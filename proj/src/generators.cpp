#include <baron/generators.hpp>

#include <baron/bounds.hpp>
#include <baron/verifier.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace baron
{
    namespace
    {
        auto require_outcome(const Weighing & w, Relation expected) -> const Weighing &
        {
            if (w.outcome() != expected)
                throw ConstructionError("constructed weighing does not have the intended outcome");
            return w;
        }

        auto range(int lo, int hi) -> std::vector<CoinLabel>
        {
            std::vector<CoinLabel> coins;
            for (int c = lo; c <= hi; ++c)
                coins.push_back(c);
            return coins;
        }

        /// Index interval [begin, end) into the sorted non-helper coins.
        struct Group
        {
            std::size_t begin;
            std::size_t end;

            auto size() const -> std::size_t { return end - begin; }
        };

        /// How one round cuts a group: lightest `light` coins, heaviest `heavy` coins, middle out.
        struct Cut
        {
            std::size_t light;
            std::size_t heavy;
        };

        /**
         * Shared driver for the splitting generators: holds the non-helper coins,
         * their prefix sums and the current groups.
         */
        /// Storage a Splitter can borrow so repeated runs skip fresh allocations.
        struct SplitterBuffers
        {
            std::vector<CoinLabel> coins;
            std::vector<long long> prefix;
            std::vector<Group> groups;
            std::vector<Group> next;
            std::vector<std::pair<std::size_t, Cut>> cuts;
        };

        class Splitter
        {
        public:
            Splitter(int n, bool materialize, SplitterBuffers * borrow = nullptr) :
                _n(n),
                _materialize(materialize),
                _helper(generate_helper(n)),
                _borrow(borrow)
            {
                if (_borrow) {
                    _coins = std::move(_borrow->coins);
                    _prefix = std::move(_borrow->prefix);
                    _groups = std::move(_borrow->groups);
                    _next = std::move(_borrow->next);
                    _cuts = std::move(_borrow->cuts);
                    _coins.clear();
                    _groups.clear();
                    _next.clear();
                    _cuts.clear();
                }
                _coins.reserve(n);
                auto next_helper = _helper.helpers.coins.begin();
                for (int c = 1; c <= n; ++c) {
                    if (next_helper != _helper.helpers.coins.end() && *next_helper == c)
                        ++next_helper;
                    else
                        _coins.push_back(c);
                }
                _prefix.assign(_coins.size() + 1, 0);
                for (std::size_t i = 0; i < _coins.size(); ++i)
                    _prefix[i + 1] = _prefix[i] + _coins[i];
                _groups.reserve(_coins.size() / 2 + 1);
                _next.reserve(_coins.size() / 2 + 1);
                if (_coins.size() > 1)
                    _groups.push_back({0, _coins.size()});
                else if (_coins.size() == 1)
                    _singles.push_back({0, 1});

                _helper_total = std::accumulate(_helper.helpers.coins.begin(), _helper.helpers.coins.end(), 0LL);
            }

            Splitter(const Splitter &) = delete;
            auto operator=(const Splitter &) -> Splitter & = delete;

            ~Splitter()
            {
                if (_borrow) {
                    _borrow->coins = std::move(_coins);
                    _borrow->prefix = std::move(_prefix);
                    _borrow->groups = std::move(_groups);
                    _borrow->next = std::move(_next);
                    _borrow->cuts = std::move(_cuts);
                }
            }

            /// Scratch space for a round's cuts.
            auto cuts_buffer() -> std::vector<std::pair<std::size_t, Cut>> & { return _cuts; }

            auto sum(std::size_t begin, std::size_t end) const -> long long { return _prefix[end] - _prefix[begin]; }
            auto coin(std::size_t i) const -> CoinLabel { return _coins[i]; }
            auto helper_total() const -> long long { return _helper_total; }

            auto done() const -> bool { return _groups.empty(); }

            /// Groups of two or more coins, which are the only ones kept in _groups.
            auto active_groups() const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> active(_groups.size());
                std::iota(active.begin(), active.end(), std::size_t{0});
                return active;
            }

            auto group(std::size_t i) const -> const Group & { return _groups[i]; }
            auto group_count() const -> std::size_t { return _groups.size(); }
            auto coin_count() const -> std::size_t { return _coins.size(); }

            /**
             * Plans one equality weighing: the light parts of the listed groups
             * against their heavy parts, with helpers making up the difference
             * on the lighter pan. Coins are only listed out when materializing.
             */
            auto emit(const std::vector<std::pair<std::size_t, Cut>> & cuts) -> void
            {
                Planned p;
                long long imbalance = 0; // right minus left
                for (const auto & [gi, cut] : cuts) {
                    const auto & g = _groups[gi];
                    imbalance += sum(g.end - cut.heavy, g.end) - sum(g.begin, g.begin + cut.light);
                    if (_materialize) {
                        p.light.push_back({g.begin, g.begin + cut.light});
                        p.heavy.push_back({g.end - cut.heavy, g.end});
                    }
                }
                p.settle = helper_subset(imbalance >= 0 ? imbalance : -imbalance, _helper.helpers.coins);
                p.settle_on_light = imbalance >= 0;
                if (! _materialize)
                    p.settle.clear();
                _planned.push_back(std::move(p));
            }

            /// Replaces each cut group by its parts, keeping the order; single coins are settled.
            auto refine(const std::vector<std::pair<std::size_t, Cut>> & cuts) -> void
            {
                _next.clear();
                auto keep = [&](Group g) {
                    if (g.size() > 1)
                        _next.push_back(g);
                    else if (g.size() == 1 && _materialize)
                        _singles.push_back(g);
                };
                std::size_t k = 0;
                for (std::size_t gi = 0; gi < _groups.size(); ++gi) {
                    const auto & g = _groups[gi];
                    if (k < cuts.size() && cuts[k].first == gi) {
                        auto [light, heavy] = cuts[k].second;
                        keep({g.begin, g.begin + light});
                        keep({g.begin + light, g.end - heavy});
                        keep({g.end - heavy, g.end});
                        ++k;
                    }
                    else
                        keep(g);
                }
                std::swap(_groups, _next);
            }

            auto partition() const -> RangePartition
            {
                std::vector<Group> all(_groups);
                all.insert(all.end(), _singles.begin(), _singles.end());
                std::ranges::sort(all, {}, &Group::begin);
                RangePartition p;
                for (const auto & g : all)
                    p.groups.push_back({_coins[g.begin], _coins[g.end - 1]});
                return p;
            }

            auto weighing_count() const -> int { return static_cast<int>(_helper.scheme.size() + _planned.size()); }

            auto finish() -> Scheme
            {
                if (! _materialize)
                    throw std::logic_error("splitter was run without materializing weighings");
                auto ws = _helper.scheme.weighings();
                std::vector<Weighing> out(ws.begin(), ws.end());
                for (const auto & p : _planned) {
                    std::vector<CoinLabel> left, right;
                    for (const auto & g : p.light)
                        left.insert(left.end(), _coins.begin() + g.begin, _coins.begin() + g.end);
                    for (const auto & g : p.heavy)
                        right.insert(right.end(), _coins.begin() + g.begin, _coins.begin() + g.end);
                    auto & lighter = p.settle_on_light ? left : right;
                    lighter.insert(lighter.end(), p.settle.begin(), p.settle.end());
                    out.push_back(require_outcome(make_weighing(std::move(left), std::move(right)), Relation::equal));
                }
                return Scheme{_n, std::move(out)};
            }

        private:
            struct Planned
            {
                std::vector<Group> light;
                std::vector<Group> heavy;
                std::vector<CoinLabel> settle;
                bool settle_on_light = true;
            };

            int _n;
            bool _materialize;
            HelperScheme _helper;
            SplitterBuffers * _borrow;
            std::vector<std::pair<std::size_t, Cut>> _cuts;
            std::vector<CoinLabel> _coins;
            std::vector<long long> _prefix;
            std::vector<Group> _groups; // two or more coins
            std::vector<Group> _singles;
            std::vector<Group> _next;
            long long _helper_total = 0;
            std::vector<Planned> _planned;
        };

        // Smallest k with k >= (sqrt6 - 2) * width.
        auto ceil_alpha_times(long long width) -> long long
        {
            auto k = static_cast<long long>(std::ceil((std::sqrt(6.0) - 2.0) * static_cast<double>(width)));
            // (k + 2w)^2 >= 6 w^2  <=>  k >= alpha * w, for k + 2w >= 0
            auto ok = [&](long long x) { return (x + 2 * width) * (x + 2 * width) >= 6 * width * width; };
            while (k > 0 && ok(k - 1))
                --k;
            while (! ok(k))
                ++k;
            return k;
        }

        /// Triangular up-chain ending with coin `target` on the right pan (coins >= claimed).
        auto up_chain(int target, const TriangularTriple & t) -> std::vector<Weighing>
        {
            std::vector<Weighing> out;
            auto tc = triangular(t.c);
            out.push_back(make_weighing(range(1, t.c), {static_cast<CoinLabel>(tc)}));
            if (t.b > 0)
                out.push_back(make_weighing(
                    [&] { auto l = range(1, t.b); l.push_back(static_cast<CoinLabel>(tc)); return l; }(),
                    {static_cast<CoinLabel>(target - triangular(t.a))}));
            if (t.a > 0)
                out.push_back(make_weighing(
                    [&] { auto l = range(1, t.a); l.push_back(static_cast<CoinLabel>(target - triangular(t.a))); return l; }(),
                    {target}));
            return out;
        }

        /// First decomposition of m, in search order, whose weighings are all legal and balance.
        auto first_legal(long long m, int n, const std::function<std::vector<Weighing>(const TriangularTriple &)> & build)
            -> std::optional<std::vector<Weighing>>
        {
            std::optional<std::vector<Weighing>> found;
            for_each_triangular_decomposition(m, [&](const TriangularTriple & t) {
                try {
                    auto ws = build(t);
                    Scheme check{n, ws};
                    if (std::ranges::all_of(ws, [](const Weighing & w) { return w.outcome() == Relation::equal; })) {
                        found = std::move(ws);
                        return false;
                    }
                }
                catch (const SchemeError &) {
                }
                return true;
            });
            return found;
        }

        /// Weighings showing coin t is at least t grams.
        auto lower_chain(int n, CoinLabel t) -> std::optional<std::vector<Weighing>>
        {
            // The decompositions of 1 and 2 need coin 1 twice; 1 needs no proof and 2 one comparison.
            if (t == 1)
                return std::vector<Weighing>{};
            if (t == 2)
                return std::vector<Weighing>{make_weighing({1}, {2})};
            return first_legal(t, n, [&](const TriangularTriple & d) { return up_chain(t, d); });
        }

        /// Heavy branch: climb from t to n through T_k + t and n - T_i.
        auto heavy_branch(int n, CoinLabel t) -> std::optional<std::vector<Weighing>>
        {
            if (t == n)
                return std::vector<Weighing>{};
            return first_legal(n - t, n, [&](const TriangularTriple & d) {
                std::vector<Weighing> out;
                auto tk = static_cast<CoinLabel>(triangular(d.c));
                auto ti = static_cast<CoinLabel>(triangular(d.a));
                auto l = range(1, d.c);
                l.push_back(t);
                out.push_back(make_weighing(std::move(l), {tk + t}));
                if (d.b > 0) {
                    auto l2 = range(1, d.b);
                    l2.push_back(tk + t);
                    out.push_back(make_weighing(std::move(l2), {n - ti}));
                }
                if (d.a > 0) {
                    auto l3 = range(1, d.a);
                    l3.push_back(n - ti);
                    out.push_back(make_weighing(std::move(l3), {n}));
                }
                return out;
            });
        }

        /// Light branch: prove n - t from below, then (n - t) + t = n.
        auto light_branch(int n, CoinLabel t) -> std::optional<std::vector<Weighing>>
        {
            if (t == n)
                return std::vector<Weighing>{};
            return first_legal(n - t, n, [&](const TriangularTriple & d) {
                auto out = up_chain(n - t, d);
                out.push_back(make_weighing({n - t, t}, {n}));
                return out;
            });
        }
    }

    auto generate_trivial(int n) -> Scheme
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        std::vector<Weighing> ws;
        for (int k = 1; k < n; ++k)
            ws.push_back(require_outcome(make_weighing({k}, {k + 1}), Relation::less));
        return Scheme{n, std::move(ws)};
    }

    auto generate_helper(int n) -> HelperScheme
    {
        if (n < 2)
            throw std::invalid_argument("helper coins need n >= 2");

        int top = ceil_log2(n) - 1; // 2^top < n <= 2^(top + 1)
        std::vector<Weighing> ws;
        std::vector<CoinLabel> chain;
        for (int e = 1; e <= top; ++e) {
            chain.push_back(1 << (e - 1));
            ws.push_back(require_outcome(make_weighing(chain, {1 << e}), Relation::less));
        }

        std::vector<CoinLabel> expansion;
        for (int e = top; e >= 0; --e)
            if ((n - 1) & (1 << e))
                expansion.push_back(1 << e);
        ws.push_back(require_outcome(make_weighing(std::move(expansion), {n}), Relation::less));

        HelperSet helpers{n, {}, static_cast<int>(ws.size())};
        for (int e = 0; e <= top; ++e)
            helpers.coins.push_back(1 << e);
        helpers.coins.push_back(n);
        return {Scheme{n, std::move(ws)}, std::move(helpers)};
    }

    auto helper_subset(long long amount, const std::vector<CoinLabel> & helpers) -> std::vector<CoinLabel>
    {
        std::vector<CoinLabel> desc(helpers.rbegin(), helpers.rend());
        std::ranges::sort(desc, std::greater<>{});
        std::vector<CoinLabel> picked;
        for (auto h : desc)
            if (h <= amount) {
                picked.push_back(h);
                amount -= h;
            }
        if (amount != 0)
            throw ConstructionError("helper coins cannot make up the required difference");
        return picked;
    }

    namespace
    {
        auto binary_rounds(Splitter & split, SplitStats & stats, std::vector<RangePartition> * trace) -> void
        {
            if (trace)
                trace->push_back(split.partition());
            auto & cuts = split.cuts_buffer();
            cuts.reserve(split.coin_count() / 2 + 1);
            while (! split.done()) {
                long long left_weight = 0;
                cuts.clear();
                for (std::size_t gi = 0; gi < split.group_count(); ++gi) {
                    const auto & g = split.group(gi);
                    auto half = g.size() / 2;
                    left_weight += split.sum(g.begin, g.begin + half);
                    cuts.push_back({gi, {half, 0}});
                }

                // Heaviest unused coins go right until the right pan is not lighter.
                long long right_weight = 0;
                for (auto it = cuts.rbegin(); it != cuts.rend() && right_weight < left_weight; ++it) {
                    const auto & g = split.group(it->first);
                    auto upper = g.size() - it->second.light;
                    auto whole = split.sum(g.end - upper, g.end);
                    if (right_weight + whole < left_weight) {
                        right_weight += whole;
                        it->second.heavy = upper;
                        continue;
                    }
                    std::size_t lo = 1, hi = upper;
                    while (lo < hi) {
                        auto mid = (lo + hi) / 2;
                        if (right_weight + split.sum(g.end - mid, g.end) >= left_weight)
                            hi = mid;
                        else
                            lo = mid + 1;
                    }
                    it->second.heavy = lo;
                    right_weight += split.sum(g.end - lo, g.end);
                }
                if (right_weight < left_weight)
                    throw ConstructionError("not enough weight to balance the small halves");

                split.emit(cuts);

                // Each group divides into its small half and the rest.
                for (auto & [gi, cut] : cuts)
                    cut.heavy = split.group(gi).size() - cut.light;
                split.refine(cuts);
                ++stats.rounds;
                if (trace)
                    trace->push_back(split.partition());
            }
        }
    }

    auto generate_binary_traced(int n) -> SplitResult
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        if (n == 1)
            return {Scheme{1}, {}, {}};
        Splitter split(n, true);
        SplitResult r{Scheme{n}, {}, {}};
        binary_rounds(split, r.stats, &r.trace);
        r.scheme = split.finish();
        return r;
    }

    auto generate_binary(int n) -> Scheme
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        if (n == 1)
            return Scheme{1};
        Splitter split(n, true);
        SplitStats stats;
        binary_rounds(split, stats, nullptr);
        return split.finish();
    }

    auto binary_weighing_count(int n) -> int
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        if (n == 1)
            return 0;
        thread_local SplitterBuffers buffers;
        Splitter split(n, false, &buffers);
        SplitStats stats;
        binary_rounds(split, stats, nullptr);
        return split.weighing_count();
    }

    auto generate_refined_traced(int n) -> SplitResult
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");
        if (n == 1)
            return {Scheme{1}, {}, {}};

        Splitter split(n, true);
        SplitStats stats;
        std::vector<RangePartition> trace{split.partition()};
        while (! split.done()) {
            auto active = split.active_groups();

            struct Option
            {
                Cut heavy_cut;
                long long heavy_diff;
                std::optional<Cut> light_cut;
                long long light_diff;
            };

            std::vector<std::pair<std::size_t, Option>> options;
            for (auto gi : active) {
                const auto & g = split.group(gi);
                auto width = split.coin(g.end - 1) - split.coin(g.begin) + 1;
                // The light part holds the coins below coin(begin) + ceil(alpha * width).
                auto limit = split.coin(g.begin) + ceil_alpha_times(width);
                std::size_t light = 0;
                while (light + 1 < g.size() && split.coin(g.begin + light) < limit)
                    ++light;
                light = std::max<std::size_t>(light, 1);

                // Shrink the light part until some heavy tail outweighs it.
                for (;; --light) {
                    auto light_weight = split.sum(g.begin, g.begin + light);
                    auto available = g.size() - light;
                    if (split.sum(g.end - available, g.end) < light_weight)
                        continue;
                    std::size_t lo = 1, hi = available;
                    while (lo < hi) {
                        auto mid = (lo + hi) / 2;
                        if (split.sum(g.end - mid, g.end) >= light_weight)
                            hi = mid;
                        else
                            lo = mid + 1;
                    }
                    Option opt{{light, lo}, split.sum(g.end - lo, g.end) - light_weight, std::nullopt, 0};
                    if (lo > 1) {
                        opt.light_cut = Cut{light, lo - 1};
                        opt.light_diff = split.sum(g.end - (lo - 1), g.end) - light_weight;
                    }
                    options.push_back({gi, opt});
                    break;
                }
            }

            // Pack groups into weighings whose imbalance the helpers can settle.
            std::vector<std::vector<std::pair<std::size_t, Cut>>> batches(1);
            long long imbalance = 0;
            for (const auto & [gi, opt] : options) {
                if (std::llabs(imbalance + opt.heavy_diff) <= split.helper_total()) {
                    imbalance += opt.heavy_diff;
                    batches.back().push_back({gi, opt.heavy_cut});
                }
                else if (opt.light_cut && std::llabs(imbalance + opt.light_diff) <= split.helper_total()) {
                    imbalance += opt.light_diff;
                    batches.back().push_back({gi, *opt.light_cut});
                    ++stats.light_groups;
                }
                else {
                    batches.emplace_back();
                    batches.back().push_back({gi, opt.heavy_cut});
                    imbalance = opt.heavy_diff;
                }
            }

            std::vector<std::pair<std::size_t, Cut>> all;
            for (const auto & batch : batches) {
                split.emit(batch);
                all.insert(all.end(), batch.begin(), batch.end());
            }
            split.refine(all);

            ++stats.rounds;
            if (batches.size() > 1) {
                ++stats.split_rounds;
                stats.extra_weighings += static_cast<int>(batches.size()) - 1;
            }
            trace.push_back(split.partition());
        }
        return {split.finish(), stats, std::move(trace)};
    }

    auto generate_refined(int n) -> Scheme
    {
        return generate_refined_traced(n).scheme;
    }

    auto for_each_triangular_decomposition(long long m, const std::function<bool(const TriangularTriple &)> & visit) -> void
    {
        if (m < 0)
            throw std::invalid_argument("cannot decompose a negative number");

        auto triangular_root = [](long long x) -> long long {
            // l with T_l = x, or -1
            auto s = static_cast<long long>(std::sqrt(static_cast<double>(8 * x + 1)));
            while (s * s > 8 * x + 1)
                --s;
            while ((s + 1) * (s + 1) <= 8 * x + 1)
                ++s;
            return s * s == 8 * x + 1 ? (s - 1) / 2 : -1;
        };
        auto largest_root = [](long long x) {
            long long l = static_cast<long long>(std::sqrt(2.0 * static_cast<double>(x)));
            while (triangular(l) > x)
                --l;
            while (triangular(l + 1) <= x)
                ++l;
            return l;
        };

        // c is the largest part, so 3 T_c >= m; b the middle, so 2 T_b >= m - T_c.
        for (auto c = largest_root(m); c >= 0 && 3 * triangular(c) >= m; --c) {
            auto rest = m - triangular(c);
            for (auto b = std::min(c, largest_root(rest)); b >= 0 && 2 * triangular(b) >= rest; --b) {
                auto a = triangular_root(rest - triangular(b));
                if (a < 0 || a > b)
                    continue;
                TriangularTriple t{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), m};
                if (! visit(t))
                    return;
            }
        }
    }

    auto decompose_triangular(long long m) -> std::vector<TriangularTriple>
    {
        std::vector<TriangularTriple> all;
        for_each_triangular_decomposition(m, [&](const TriangularTriple & t) {
            all.push_back(t);
            return true;
        });
        return all;
    }

    auto generate_particular_coin(int n, CoinLabel t) -> Scheme
    {
        if (t < 1 || t > n)
            throw std::invalid_argument("target coin must lie in [1..n]");

        if (n <= 8) {
            auto full = generate_binary(n);
            auto ws = full.weighings();
            for (std::size_t len = 0; len <= ws.size(); ++len) {
                Scheme prefix{n, {ws.begin(), ws.begin() + static_cast<std::ptrdiff_t>(len)}};
                if (identifies_coin(prefix, t).pinned)
                    return prefix;
            }
            throw ConstructionError("binary scheme does not pin the target coin");
        }

        auto lower = lower_chain(n, t);
        if (! lower)
            throw ConstructionError("no legal triangular chain for coin " + std::to_string(t));

        // t^2 >= 2n keeps the chain coins below t, which the heavy branch needs.
        bool heavy_first = static_cast<long long>(t) * t >= 2LL * n;
        auto upper = heavy_first ? heavy_branch(n, t) : light_branch(n, t);
        if (! upper)
            upper = heavy_first ? light_branch(n, t) : heavy_branch(n, t);
        if (! upper)
            throw ConstructionError("no legal triangular chain from coin " + std::to_string(t) + " to coin " + std::to_string(n));

        auto ws = std::move(*lower);
        ws.insert(ws.end(), upper->begin(), upper->end());
        return Scheme{n, std::move(ws)};
    }
}
