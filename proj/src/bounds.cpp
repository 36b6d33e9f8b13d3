#include <baron/bounds.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <stdexcept>

namespace baron
{
    namespace
    {
        using boost::multiprecision::cpp_int;

        // (sqrt6 - 2)^k as p + q*sqrt6.
        struct QuadraticInteger
        {
            cpp_int p;
            cpp_int q;
        };

        auto times_alpha(const QuadraticInteger & x) -> QuadraticInteger
        {
            return {-2 * x.p + 6 * x.q, x.p - 2 * x.q};
        }

        // b * sqrt6 <= a
        auto sqrt6_times_at_most(const cpp_int & b, const cpp_int & a) -> bool
        {
            if (b <= 0 && a >= 0)
                return true;
            if (b >= 0 && a < 0)
                return false;
            if (b > 0)
                return 6 * b * b <= a * a;
            return 6 * b * b >= a * a;
        }

        struct KnownValue
        {
            int n;
            int value;
        };

        // 1..6 worked by hand; 7..9 exhaustive search; 10, 11 Radul's schemes;
        // 12..17 and 53 Knop; 18, 19 Kalenkov; 58 Kalenkov's four weighings
        // meeting ceil(log3 58) = 4.
        constexpr std::array known_values{
            KnownValue{1, 0}, KnownValue{2, 1}, KnownValue{3, 2}, KnownValue{4, 2}, KnownValue{5, 2},
            KnownValue{6, 2}, KnownValue{7, 3}, KnownValue{8, 3}, KnownValue{9, 3}, KnownValue{10, 3},
            KnownValue{11, 3}, KnownValue{12, 3}, KnownValue{13, 3}, KnownValue{14, 3}, KnownValue{15, 3},
            KnownValue{16, 3}, KnownValue{17, 3}, KnownValue{18, 3}, KnownValue{19, 3}, KnownValue{53, 4},
            KnownValue{58, 4}};
    }

    auto ceil_log2(long long n) -> int
    {
        int k = 0;
        for (long long p = 1; p < n; p *= 2)
            ++k;
        return k;
    }

    auto ceil_log3(long long n) -> int
    {
        int k = 0;
        for (long long p = 1; p < n; p *= 3)
            ++k;
        return k;
    }

    auto ceil_log_inverse_alpha(long long n) -> int
    {
        // (1/alpha)^k >= n  <=>  n * alpha^k <= 1  <=>  (n q) sqrt6 <= 1 - n p
        QuadraticInteger power{1, 0};
        int k = 0;
        while (! sqrt6_times_at_most(n * power.q, 1 - n * power.p)) {
            power = times_alpha(power);
            ++k;
        }
        return k;
    }

    auto known_value(int n) -> std::optional<int>
    {
        for (auto [m, v] : known_values)
            if (m == n)
                return v;
        return std::nullopt;
    }

    auto bounds_for(int n) -> BoundsReport
    {
        if (n < 1)
            throw std::invalid_argument("n must be positive");

        BoundsReport r;
        r.n = n;
        r.natural_lower = ceil_log3(n);
        r.trivial_upper = n - 1;
        r.binary_upper = 2 * ceil_log2(n);
        r.refined_upper = ceil_log2(n) + ceil_log_inverse_alpha(n);

        // ceil(log3(3n/8)): smallest k >= 0 with 8 * 3^k >= 3n (3n/8 > 1/3 keeps k >= 0).
        if (n > 1) {
            int k = 0;
            for (long long p = 1; 8 * p < 3LL * n; p *= 3)
                ++k;
            r.conditional_lower = k + 1;
        }
        r.known_exact = known_value(n);
        return r;
    }
}
