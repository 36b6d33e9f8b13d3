#pragma once

#include <baron/model.hpp>
#include <baron/scheme_io.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace baron::testing
{
    inline auto fixture(const std::string & name) -> Scheme
    {
        std::ifstream in(std::string(BARON_FIXTURE_DIR) + "/" + name);
        std::ostringstream text;
        text << in.rdbuf();
        return parse_scheme(text.str());
    }

    /// Random non-empty weighings over [1..n] with outcomes read off the identity.
    inline auto random_scheme(std::mt19937_64 & rng, int n, int k) -> Scheme
    {
        std::vector<Weighing> ws;
        std::uniform_int_distribution<int> pan(0, 2);
        while (static_cast<int>(ws.size()) < k) {
            std::vector<CoinLabel> left, right;
            for (int c = 1; c <= n; ++c) {
                auto p = pan(rng);
                if (p == 1)
                    left.push_back(c);
                else if (p == 2)
                    right.push_back(c);
            }
            if (left.empty() && right.empty())
                continue;
            ws.push_back(make_weighing(left, right));
        }
        return Scheme{n, ws};
    }

    /// Counts consistent assignments over all n! permutations.
    inline auto naive_count(const Scheme & s) -> std::uint64_t
    {
        std::vector<int> w(s.n());
        for (int i = 0; i < s.n(); ++i)
            w[i] = i + 1;
        std::uint64_t count = 0;
        do
            count += is_consistent(Assignment(w), s);
        while (std::ranges::next_permutation(w).found);
        return count;
    }

    inline auto weighing(std::vector<CoinLabel> left, std::vector<CoinLabel> right, Relation r) -> Weighing
    {
        return Weighing{std::move(left), std::move(right), r};
    }
}
