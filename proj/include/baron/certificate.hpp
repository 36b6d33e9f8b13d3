#pragma once

#include <baron/model.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace baron
{
    using Rational = boost::multiprecision::cpp_rational;
    using BigInt = boost::multiprecision::cpp_int;

    /// Largest number of weighings find_multipliers will eliminate over.
    inline constexpr std::size_t max_multiplier_weighings = 6;

    /// The certificate question is not well posed for the given input.
    class CertificateError : public std::invalid_argument
    {
    public:
        enum class Kind
        {
            non_equality_weighing,
            multiplier_count_mismatch,
            non_positive_multiplier,
            too_many_weighings,
            malformed_multiplier
        };

        CertificateError(Kind kind, const std::string & message);

        auto kind() const -> Kind { return _kind; }

    private:
        Kind _kind;
    };

    /**
     * Positive multipliers, one per weighing, and the coefficient of each coin
     * in the weighted sum of the weighings (left pan positive). Strictly
     * decreasing coefficients summing to zero against the identity prove the
     * identity is the only consistent assignment: any other assignment makes
     * the weighted sum strictly positive.
     */
    struct Certificate
    {
        std::vector<Rational> multipliers;
        std::vector<Rational> coefficients; // coefficients[j - 1] for coin j
    };

    struct CertificateCheck
    {
        bool accepted = false;
        Certificate certificate;
        /// Why the certificate was rejected; empty when accepted.
        std::string reason;
    };

    /// c_j = sum_i multipliers[i] * (+1 if j on left of weighing i, -1 if on right, else 0).
    auto combined_coefficients(const Scheme & s, const std::vector<Rational> & multipliers) -> std::vector<Rational>;

    /// Throws CertificateError on any non-equality weighing, count mismatch or non-positive multiplier.
    auto check_certificate(const Scheme & s, const std::vector<Rational> & multipliers) -> CertificateCheck;

    /**
     * Searches the open cone of positive multipliers with strictly decreasing
     * coefficients. Returns a primitive integer point of it, or nothing when
     * the cone is empty. Exact; at most max_multiplier_weighings weighings.
     */
    auto find_multipliers(const Scheme & s) -> std::optional<std::vector<BigInt>>;

    /// "12,7,3" or "3/2,1": comma-separated positive integers or fractions p/q.
    auto parse_multipliers(std::string_view text) -> std::vector<Rational>;

    auto to_string(const Rational & r) -> std::string;
}
