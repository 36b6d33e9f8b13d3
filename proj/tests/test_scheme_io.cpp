#include "support.hpp"

#include <doctest.h>

using namespace baron;

TEST_CASE("parse the two-weighing example")
{
    auto s = parse_scheme("n 6\n1+2+3 = 6\n1+6 < 3+5\n");
    CHECK(s.n() == 6);
    REQUIRE(s.size() == 2);
    CHECK(s.weighings()[0] == make_weighing({1, 2, 3}, {6}));
    CHECK(s.weighings()[1].outcome() == Relation::less);
}

TEST_CASE("empty scheme")
{
    auto s = parse_scheme("n 1\n");
    CHECK(s.n() == 1);
    CHECK(s.size() == 0);
}

TEST_CASE("comments and blank lines after the header")
{
    auto s = parse_scheme("n 3\n# first\n\n1 < 2\n#\n2 < 3\n");
    CHECK(s.size() == 2);
    CHECK_THROWS_AS(parse_scheme("n 3\n  # indented\n"), ParseError);
    CHECK_THROWS_AS(parse_scheme("# before\nn 3\n"), ParseError);
}

TEST_CASE("parse errors carry positions")
{
    auto error_at = [](const char * text) -> std::pair<int, int> {
        try {
            parse_scheme(text);
        }
        catch (const ParseError & e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    CHECK(error_at("n 6\n1+1 < 3\n").first == 2);
    CHECK(error_at("n 6\n1+2 < 7\n") == std::pair{2, 7});
    CHECK(error_at("1 < 2\n").first == 1);
    CHECK(error_at("n 3\n1 <\n").first == 2);
    CHECK(error_at("n 3\n1 ? 2\n").first == 2);
    CHECK(error_at("n 0\n").first == 1);
    CHECK(error_at("n 3\n1 < 2 junk\n").first == 2);
}

TEST_CASE("empty pans are written as 0")
{
    Scheme s{3, {make_weighing({3}, {})}};
    CHECK(serialize_scheme(s) == "n 3\n3 > 0\n");
    CHECK(parse_scheme("n 3\n3 > 0\n") == s);
    CHECK_THROWS_AS(parse_scheme("n 3\n0 = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_scheme("n 3\n0+1 < 2\n"), ParseError);
}

TEST_CASE("serialization is canonical")
{
    CHECK(serialize_scheme(Scheme{2, {make_weighing({1}, {2})}}) == "n 2\n1 < 2\n");
    auto n15 = baron::testing::fixture("n15.scheme");
    CHECK(format_weighing(n15.weighings()[0]) == "1+2+3+4+5+6+7 < 14+15");
}

TEST_CASE("round trip on random schemes")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 40)(rng);
        auto base = baron::testing::random_scheme(rng, n, std::uniform_int_distribution<int>(0, 6)(rng));
        std::vector<Weighing> ws;
        for (auto & w : base.weighings())
            ws.push_back(w.with_outcome(static_cast<Relation>(std::uniform_int_distribution<int>(0, 2)(rng))));
        Scheme s{n, ws};
        CHECK(parse_scheme(serialize_scheme(s)) == s);
    }
}
