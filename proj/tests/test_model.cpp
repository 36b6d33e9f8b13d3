#include "support.hpp"

#include <doctest.h>

using namespace baron;
using baron::testing::weighing;

TEST_CASE("evaluate_weighing on small examples")
{
    auto id6 = Assignment::identity(6);
    CHECK(evaluate_weighing(id6, weighing({1, 2, 3}, {6}, Relation::equal)) == Relation::equal);
    CHECK(evaluate_weighing(Assignment::identity(2), weighing({1}, {2}, Relation::less)) == Relation::less);
    auto swapped = Assignment::transposition(6, 5, 6);
    CHECK(evaluate_weighing(swapped, weighing({1, 2, 3}, {6}, Relation::equal)) == Relation::greater);
}

TEST_CASE("is_consistent")
{
    auto s = baron::testing::fixture("n6.scheme");
    CHECK(is_consistent(Assignment::identity(6), s));
    CHECK(is_consistent(Assignment::identity(4), Scheme{4}));
    CHECK_FALSE(is_consistent(Assignment::transposition(6, 5, 6), s));
}

TEST_CASE("weighing construction rejects bad pans")
{
    CHECK_THROWS_AS(weighing({1, 1}, {3}, Relation::less), SchemeError);
    CHECK_THROWS_AS(weighing({1, 2}, {2}, Relation::less), SchemeError);
    CHECK_THROWS_AS(weighing({}, {}, Relation::equal), SchemeError);
    CHECK_THROWS_AS(weighing({0}, {1}, Relation::less), SchemeError);
    auto w = weighing({3, 1}, {2}, Relation::greater);
    CHECK(std::vector<int>(w.left().begin(), w.left().end()) == std::vector<int>{1, 3});
}

TEST_CASE("scheme and assignment validation")
{
    CHECK_THROWS_AS(Scheme{0}, SchemeError);
    CHECK_THROWS_AS((Scheme{3, {weighing({1}, {4}, Relation::less)}}), SchemeError);
    CHECK_THROWS(Assignment({1, 1, 2}));
    CHECK_THROWS(Assignment({1, 2, 4}));
    CHECK(Assignment::identity(5).is_identity());
    CHECK_FALSE(Assignment::transposition(5, 2, 4).is_identity());
    CHECK(to_string(Assignment::transposition(3, 1, 3)) == "3,2,1");
}

TEST_CASE("pan swap flips the outcome")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = baron::testing::random_scheme(rng, 8, 1);
        auto w = s.weighings()[0];
        std::vector<int> perm{1, 2, 3, 4, 5, 6, 7, 8};
        std::ranges::shuffle(perm, rng);
        Assignment a(perm);
        CHECK(evaluate_weighing(a, w.swapped()) == flip(evaluate_weighing(a, w)));
    }
    CHECK(flip(Relation::equal) == Relation::equal);
}

TEST_CASE("make_weighing reads the outcome off the identity")
{
    CHECK(make_weighing({1, 2, 3}, {6}).outcome() == Relation::equal);
    CHECK(make_weighing({1, 6}, {3, 5}).outcome() == Relation::less);
    CHECK(make_weighing({5}, {1, 2}).outcome() == Relation::greater);
}
