#include "support.hpp"

#include <baron/certificate.hpp>
#include <baron/verifier.hpp>

#include <doctest.h>

using namespace baron;
using baron::testing::fixture;

namespace
{
    auto rationals(std::initializer_list<int> xs) -> std::vector<Rational>
    {
        std::vector<Rational> out;
        for (int x : xs)
            out.emplace_back(x);
        return out;
    }

    auto kind_of(const std::function<void()> & f) -> std::optional<CertificateError::Kind>
    {
        try {
            f();
        }
        catch (const CertificateError & e) {
            return e.kind();
        }
        return std::nullopt;
    }

    /// Random placements, all claimed to balance, whether or not they do.
    auto random_equalities(std::mt19937_64 & rng, int n, int m) -> Scheme
    {
        auto placements = baron::testing::random_scheme(rng, n, m);
        std::vector<Weighing> ws;
        for (auto & w : placements.weighings())
            ws.push_back(w.with_outcome(Relation::equal));
        return Scheme{n, ws};
    }

    /// Random weighings that truly balance under the identity.
    auto random_true_equalities(std::mt19937_64 & rng, int n, int m) -> Scheme
    {
        std::vector<Weighing> ws;
        while (static_cast<int>(ws.size()) < m) {
            auto one = baron::testing::random_scheme(rng, n, 1);
            auto w = one.weighings()[0];
            if (w.outcome() == Relation::equal)
                ws.push_back(w);
        }
        return Scheme{n, ws};
    }

    auto strictly_decreasing(const std::vector<Rational> & c) -> bool
    {
        for (std::size_t j = 0; j + 1 < c.size(); ++j)
            if (c[j] <= c[j + 1])
                return false;
        return true;
    }
}

TEST_CASE("the nineteen-coin certificate")
{
    auto s = fixture("n19.scheme");
    auto r = check_certificate(s, rationals({12, 7, 3}));
    CHECK(r.accepted);
    CHECK(r.certificate.coefficients == rationals({22, 19, 16, 15, 12, 10, 9, 8, 7, 5, 4, 3, 2, 0, -3, -5, -7, -9, -12}));

    auto ones = check_certificate(s, rationals({1, 1, 1}));
    CHECK_FALSE(ones.accepted);
    CHECK(ones.reason.find("decreasing") != std::string::npos);

    auto found = find_multipliers(s);
    REQUIRE(found);
    std::vector<Rational> lambda(found->begin(), found->end());
    CHECK(check_certificate(s, lambda).accepted);
}

TEST_CASE("precondition errors are distinct")
{
    auto n19 = fixture("n19.scheme");
    CHECK(kind_of([&] { check_certificate(Scheme{2, {make_weighing({1}, {2})}}, rationals({1})); }) ==
          CertificateError::Kind::non_equality_weighing);
    CHECK(kind_of([&] { find_multipliers(fixture("n15.scheme")); }) == CertificateError::Kind::non_equality_weighing);
    CHECK(kind_of([&] { check_certificate(n19, rationals({1, 2})); }) == CertificateError::Kind::multiplier_count_mismatch);
    CHECK(kind_of([&] { check_certificate(n19, rationals({1, 0, 2})); }) == CertificateError::Kind::non_positive_multiplier);
    CHECK(kind_of([&] { parse_multipliers("1,,2"); }) == CertificateError::Kind::malformed_multiplier);
    CHECK(kind_of([&] { parse_multipliers("1/0"); }) == CertificateError::Kind::malformed_multiplier);
    CHECK(kind_of([&] { parse_multipliers("-1"); }) == CertificateError::Kind::malformed_multiplier);

    std::vector<Weighing> seven(7, make_weighing({1, 2}, {3}));
    CHECK(kind_of([&] { find_multipliers(Scheme{3, seven}); }) == CertificateError::Kind::too_many_weighings);
}

TEST_CASE("parse multipliers")
{
    auto xs = parse_multipliers("12,7,3/2");
    REQUIRE(xs.size() == 3);
    CHECK(xs[2] == Rational(3, 2));
    CHECK(to_string(xs[2]) == "3/2");
    CHECK(to_string(xs[0]) == "12");
}

TEST_CASE("one weighing cannot separate its left coins")
{
    CHECK_FALSE(find_multipliers(Scheme{3, {make_weighing({1, 2}, {3})}}));
}

TEST_CASE("scaling multipliers keeps the decision")
{
    auto s = fixture("n19.scheme");
    for (auto q : {Rational(1, 3), Rational(5), Rational(7, 11)}) {
        std::vector<Rational> scaled;
        for (auto x : rationals({12, 7, 3}))
            scaled.push_back(x * q);
        CHECK(check_certificate(s, scaled).accepted);
        std::vector<Rational> bad;
        for (auto x : rationals({1, 1, 1}))
            bad.push_back(x * q);
        CHECK_FALSE(check_certificate(s, bad).accepted);
    }
}

TEST_CASE("weighted sum vanishes at the identity")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_true_equalities(rng, 8, 3);
        std::vector<Rational> lambda;
        for (int i = 0; i < 3; ++i)
            lambda.emplace_back(std::uniform_int_distribution<int>(1, 20)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
        auto c = combined_coefficients(s, lambda);
        Rational total = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            total += c[j] * static_cast<int>(j + 1);
        CHECK(total == 0);
    }
}

TEST_CASE("accepted certificates prove uniqueness")
{
    std::mt19937_64 rng(29);
    int accepted = 0;
    for (int trial = 0; trial < 3000 && accepted < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(3, 10)(rng);
        auto s = random_true_equalities(rng, n, std::uniform_int_distribution<int>(1, 4)(rng));
        auto found = find_multipliers(s);
        if (! found)
            continue;
        std::vector<Rational> lambda(found->begin(), found->end());
        REQUIRE(check_certificate(s, lambda).accepted);
        CHECK(count_consistent(s, 2).consistent_count == 1);
        ++accepted;
    }
    CHECK(accepted > 0);
}

TEST_CASE("multiplier search agrees with a grid oracle")
{
    std::mt19937_64 rng(31);
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 5)(rng);
        int m = std::uniform_int_distribution<int>(1, 3)(rng);
        auto s = random_equalities(rng, n, m);

        bool grid = false;
        std::vector<int> lambda(m, 1);
        constexpr int grid_max = 12;
        while (! grid) {
            std::vector<Rational> l(lambda.begin(), lambda.end());
            grid = strictly_decreasing(combined_coefficients(s, l));
            int i = 0;
            while (i < m && lambda[i] == grid_max)
                lambda[i++] = 1;
            if (i == m)
                break;
            ++lambda[i];
        }

        auto found = find_multipliers(s);
        if (found) {
            for (const auto & x : *found)
                CHECK(x > 0);
            std::vector<Rational> l(found->begin(), found->end());
            CHECK(strictly_decreasing(combined_coefficients(s, l)));
            ++feasible;
        }
        if (grid)
            CHECK(found.has_value());
    }
    CHECK(feasible > 0);
}
