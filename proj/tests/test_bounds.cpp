#include <baron/bounds.hpp>
#include <baron/generators.hpp>

#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

using namespace baron;

TEST_CASE("conditional bound thresholds")
{
    CHECK(bounds_for(24).conditional_lower == 3);
    CHECK(bounds_for(25).conditional_lower == 4);
    CHECK(bounds_for(72).conditional_lower == 4);
    CHECK(bounds_for(73).conditional_lower == 5);
}

TEST_CASE("fifty-eight coins")
{
    auto b = bounds_for(58);
    CHECK(b.known_exact == 4);
    CHECK(b.natural_lower == 4);
    CHECK(b.refined_upper == 12);
    CHECK(b.binary_upper == 12);
}

TEST_CASE("one coin")
{
    auto b = bounds_for(1);
    CHECK(b.natural_lower == 0);
    CHECK(b.conditional_lower == 0);
    CHECK(b.trivial_upper == 0);
    CHECK(b.binary_upper == 0);
    CHECK(b.refined_upper == 0);
    CHECK(b.known_exact == 0);
    CHECK_THROWS(bounds_for(0));
}

TEST_CASE("known values lie between the bounds")
{
    for (int n = 1; n <= 100; ++n) {
        auto b = bounds_for(n);
        if (! b.known_exact)
            continue;
        CHECK(b.natural_lower <= *b.known_exact);
        CHECK(*b.known_exact <= b.binary_upper);
        CHECK(*b.known_exact <= b.refined_upper);
    }
    CHECK(known_value(7) == 3);
    CHECK(known_value(19) == 3);
    CHECK(known_value(53) == 4);
    CHECK_FALSE(known_value(20));
}

TEST_CASE("ceil logs are exact")
{
    long long p3 = 1, p2 = 1;
    int k3 = 0, k2 = 0;
    for (long long n = 1; n <= 1'000'000; ++n) {
        while (p3 < n) {
            p3 *= 3;
            ++k3;
        }
        while (p2 < n) {
            p2 *= 2;
            ++k2;
        }
        if (ceil_log3(n) != k3 || ceil_log2(n) != k2) {
            FAIL("ceil log mismatch at n = " << n);
        }
    }
    CHECK(ceil_log3(9) == 2);
    CHECK(ceil_log3(10) == 3);
}

TEST_CASE("ceil log base 1/alpha against high-precision floats")
{
    using boost::multiprecision::cpp_dec_float_50;
    cpp_dec_float_50 inv_alpha = 1 / (boost::multiprecision::sqrt(cpp_dec_float_50(6)) - 2);
    for (long long n = 1; n <= 20000; ++n) {
        int k = 0;
        cpp_dec_float_50 p = 1;
        while (p < n) {
            p *= inv_alpha;
            ++k;
        }
        CHECK(ceil_log_inverse_alpha(n) == k);
    }
}

TEST_CASE("refined bound never exceeds the binary bound")
{
    for (int n = 2; n <= 100'000; ++n) {
        auto b = bounds_for(n);
        if (b.refined_upper > b.binary_upper)
            FAIL("refined above binary at n = " << n);
        if (b.binary_upper != 2 * ceil_log2(n) || b.trivial_upper != n - 1)
            FAIL("bounds mismatch at n = " << n);
    }
}
