#include <baron/cli.hpp>
#include <baron/scheme_io.hpp>

#include <doctest.h>

#include <sstream>

namespace
{
    struct Result
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args, const std::string & input = "") -> Result
    {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = baron::cli::run(args, in, out, err);
        return {code, out.str(), err.str()};
    }

    auto fixture(const std::string & name) -> std::string { return std::string(BARON_FIXTURE_DIR) + "/" + name; }
}

TEST_CASE("verify")
{
    auto r = run({"verify", fixture("n15.scheme")});
    CHECK(r.code == 0);
    CHECK(r.out.find("identifies_all=true") != std::string::npos);

    auto bad = run({"verify", "-"}, "n 3\n1 < 2\n");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("second_witness=1,3,2") != std::string::npos);

    auto coin = run({"verify", "-", "--coin", "3"}, "n 3\n1+2 = 3\n");
    CHECK(coin.code == 0);
    CHECK(coin.out.find("pinned=true") != std::string::npos);

    auto limit = run({"verify", "-", "--limit", "100"}, "n 4\n");
    CHECK(limit.out.find("consistent_count=24") != std::string::npos);
}

TEST_CASE("verify errors exit 2")
{
    CHECK(run({"verify", "-"}, "n 3\n1 < 4\n").code == 2);
    CHECK(run({"verify", "/nonexistent/file"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "-", "--limit", "0"}, "n 2\n").code == 2);
}

TEST_CASE("help exits 0")
{
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("omni") != std::string::npos);
}

TEST_CASE("cert")
{
    auto ok = run({"cert", "check", fixture("n19.scheme"), "--multipliers", "12,7,3"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("coefficients=22,19,16,") != std::string::npos);

    auto rejected = run({"cert", "check", fixture("n19.scheme"), "--multipliers", "1,1,1"});
    CHECK(rejected.code == 1);
    CHECK(rejected.out.find("reason=") != std::string::npos);

    CHECK(run({"cert", "check", fixture("n15.scheme"), "--multipliers", "1,1,1"}).code == 2);
    CHECK(run({"cert", "check", fixture("n19.scheme"), "--multipliers", "1,1"}).code == 2);
    CHECK(run({"cert", "find", fixture("n19.scheme")}).code == 0);
    CHECK(run({"cert", "find", "-"}, "n 3\n1+2 = 3\n").code == 1);
    CHECK(run({"cert"}).code == 2);
}

TEST_CASE("omni")
{
    auto r = run({"omni", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a(2)=1\n") != std::string::npos);
    CHECK(r.out.find("witness=1 < 2\n") != std::string::npos);

    auto capped = run({"omni", "--n", "7", "--max-k", "2"});
    CHECK(capped.code == 2);
    CHECK(capped.out.find("lower_bound=3") != std::string::npos);

    CHECK(run({"omni", "--n", "0"}).code == 2);
}

TEST_CASE("gen output re-parses and verifies")
{
    for (std::string strategy : {"trivial", "binary", "refined"}) {
        auto r = run({"gen", "--strategy", strategy, "--n", "9"});
        CHECK(r.code == 0);
        CHECK_NOTHROW(baron::parse_scheme(r.out));
        CHECK(run({"verify", "-"}, r.out).code == 0);
    }
    auto helper = run({"gen", "--strategy", "helper", "--n", "9"});
    CHECK(helper.code == 0);
    CHECK(run({"verify", "-", "--coin", "9"}, helper.out).code == 0);

    auto coin = run({"gen", "--strategy", "coin", "--n", "12", "--t", "5"});
    CHECK(coin.code == 0);
    CHECK(run({"verify", "-", "--coin", "5"}, coin.out).code == 0);

    CHECK(run({"gen", "--strategy", "coin", "--n", "12"}).code == 2);
    CHECK(run({"gen", "--strategy", "magic", "--n", "12"}).code == 2);
    CHECK(run({"gen", "--strategy", "helper", "--n", "1"}).code == 2);

    auto big = run({"gen", "--strategy", "binary", "--n", "500"});
    CHECK(big.code == 0);
    CHECK_NOTHROW(baron::parse_scheme(big.out));
}

TEST_CASE("bounds")
{
    auto r = run({"bounds", "--n", "58"});
    CHECK(r.code == 0);
    CHECK(r.out.find("refined_upper=12\n") != std::string::npos);
    CHECK(r.out.find("known_exact=4\n") != std::string::npos);
    CHECK(run({"bounds", "--n", "20"}).out.find("known_exact=none") != std::string::npos);
}
