#include <baron/certificate.hpp>

#include <algorithm>
#include <map>

namespace baron
{
    CertificateError::CertificateError(Kind kind, const std::string & message) :
        std::invalid_argument(message),
        _kind(kind)
    {
    }

    namespace
    {
        auto require_all_equal(const Scheme & s) -> void
        {
            for (std::size_t i = 0; i < s.size(); ++i)
                if (s.weighings()[i].outcome() != Relation::equal)
                    throw CertificateError(CertificateError::Kind::non_equality_weighing,
                        "weighing " + std::to_string(i + 1) + " is not an equality");
        }

        /// sign[i][j - 1]: +1 if coin j is on the left of weighing i, -1 on the right, 0 out.
        auto placement_signs(const Scheme & s) -> std::vector<std::vector<int>>
        {
            std::vector<std::vector<int>> sign(s.size(), std::vector<int>(s.n(), 0));
            for (std::size_t i = 0; i < s.size(); ++i) {
                for (auto c : s.weighings()[i].left())
                    sign[i][c - 1] = 1;
                for (auto c : s.weighings()[i].right())
                    sign[i][c - 1] = -1;
            }
            return sign;
        }

        auto gcd(BigInt a, BigInt b) -> BigInt
        {
            a = abs(a);
            b = abs(b);
            while (b != 0) {
                a %= b;
                std::swap(a, b);
            }
            return a;
        }

        /// a . x >= b over exact integers and rationals.
        struct Inequality
        {
            std::vector<BigInt> a;
            Rational b;
        };

        /**
         * Inequalities keyed by their primitive coefficient direction; only the
         * tightest right-hand side per direction is kept.
         */
        class System
        {
        public:
            /// Returns false if the inequality is 0 >= b with b > 0.
            auto add(Inequality q) -> bool
            {
                BigInt g = 0;
                for (const auto & x : q.a)
                    g = gcd(g, x);
                if (g == 0)
                    return q.b <= 0;
                for (auto & x : q.a)
                    x /= g;
                q.b /= Rational(g);
                auto [it, inserted] = _rows.try_emplace(std::move(q.a), q.b);
                if (! inserted && it->second < q.b)
                    it->second = q.b;
                return true;
            }

            auto rows() const -> const std::map<std::vector<BigInt>, Rational> & { return _rows; }

        private:
            std::map<std::vector<BigInt>, Rational> _rows;
        };

        /// Tightest interval for variable v given values of variables 0..v-1; nullopt if empty.
        auto choose_value(const System & sys, std::size_t v, const std::vector<Rational> & fixed) -> std::optional<Rational>
        {
            std::optional<Rational> lower, upper;
            for (const auto & [a, b] : sys.rows()) {
                Rational rhs = b;
                for (std::size_t i = 0; i < v; ++i)
                    rhs -= Rational(a[i]) * fixed[i];
                if (a[v] == 0) {
                    if (rhs > 0)
                        return std::nullopt;
                    continue;
                }
                Rational bound = rhs / Rational(a[v]);
                if (a[v] > 0) {
                    if (! lower || bound > *lower)
                        lower = bound;
                }
                else if (! upper || bound < *upper)
                    upper = bound;
            }
            if (! lower)
                return std::nullopt; // every variable carries x_v >= 1, so this cannot happen
            if (upper && *upper < *lower)
                return std::nullopt;
            return lower;
        }
    }

    auto combined_coefficients(const Scheme & s, const std::vector<Rational> & multipliers) -> std::vector<Rational>
    {
        std::vector<Rational> c(s.n(), Rational(0));
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (auto coin : s.weighings()[i].left())
                c[coin - 1] += multipliers[i];
            for (auto coin : s.weighings()[i].right())
                c[coin - 1] -= multipliers[i];
        }
        return c;
    }

    auto check_certificate(const Scheme & s, const std::vector<Rational> & multipliers) -> CertificateCheck
    {
        require_all_equal(s);
        if (multipliers.size() != s.size())
            throw CertificateError(CertificateError::Kind::multiplier_count_mismatch,
                std::to_string(multipliers.size()) + " multipliers given for " + std::to_string(s.size()) + " weighings");
        for (std::size_t i = 0; i < multipliers.size(); ++i)
            if (multipliers[i] <= 0)
                throw CertificateError(CertificateError::Kind::non_positive_multiplier,
                    "multiplier " + std::to_string(i + 1) + " is not positive");

        CertificateCheck result;
        result.certificate.multipliers = multipliers;
        result.certificate.coefficients = combined_coefficients(s, multipliers);
        const auto & c = result.certificate.coefficients;

        Rational at_identity = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            at_identity += c[j] * static_cast<int>(j + 1);
        if (at_identity != 0) {
            result.reason = "weighted sum is " + to_string(at_identity) + " at the claimed weights, not 0";
            return result;
        }
        for (std::size_t j = 0; j + 1 < c.size(); ++j)
            if (c[j] <= c[j + 1]) {
                result.reason = "coefficients not strictly decreasing at coins " + std::to_string(j + 1) + " and " + std::to_string(j + 2);
                return result;
            }
        result.accepted = true;
        return result;
    }

    auto find_multipliers(const Scheme & s) -> std::optional<std::vector<BigInt>>
    {
        require_all_equal(s);
        auto m = s.size();
        if (m > max_multiplier_weighings)
            throw CertificateError(CertificateError::Kind::too_many_weighings,
                "multiplier search handles at most " + std::to_string(max_multiplier_weighings) + " weighings");
        if (m == 0)
            return s.n() == 1 ? std::optional<std::vector<BigInt>>{std::vector<BigInt>{}} : std::nullopt;

        // The strict cone scales into { c_j - c_{j+1} >= 1, multipliers >= 1 }.
        auto sign = placement_signs(s);
        System sys;
        for (int j = 0; j + 1 < s.n(); ++j) {
            Inequality q{std::vector<BigInt>(m), Rational(1)};
            for (std::size_t i = 0; i < m; ++i)
                q.a[i] = sign[i][j] - sign[i][j + 1];
            if (! sys.add(std::move(q)))
                return std::nullopt;
        }
        for (std::size_t i = 0; i < m; ++i) {
            Inequality q{std::vector<BigInt>(m), Rational(1)};
            q.a[i] = 1;
            sys.add(std::move(q));
        }

        // levels[v] constrains variables 0..v only.
        std::vector<System> levels(m);
        levels[m - 1] = sys;
        for (std::size_t v = m - 1; v > 0; --v) {
            std::vector<std::pair<std::vector<BigInt>, Rational>> pos, neg;
            System next;
            for (const auto & [a, b] : levels[v].rows()) {
                if (a[v] > 0)
                    pos.emplace_back(a, b);
                else if (a[v] < 0)
                    neg.emplace_back(a, b);
                else if (! next.add({a, b}))
                    return std::nullopt;
            }
            for (const auto & [ap, bp] : pos)
                for (const auto & [an, bn] : neg) {
                    BigInt wp = -an[v], wn = ap[v];
                    Inequality q{std::vector<BigInt>(m), Rational(wp) * bp + Rational(wn) * bn};
                    for (std::size_t i = 0; i < m; ++i)
                        q.a[i] = wp * ap[i] + wn * an[i];
                    if (! next.add(std::move(q)))
                        return std::nullopt;
                }
            levels[v - 1] = std::move(next);
        }

        std::vector<Rational> point;
        for (std::size_t v = 0; v < m; ++v) {
            auto value = choose_value(levels[v], v, point);
            if (! value)
                return std::nullopt;
            point.push_back(*value);
        }

        BigInt scale = 1;
        for (const auto & x : point)
            scale = scale / gcd(scale, denominator(x)) * denominator(x);
        std::vector<BigInt> result;
        BigInt g = 0;
        for (const auto & x : point) {
            result.push_back(numerator(x) * (scale / denominator(x)));
            g = gcd(g, result.back());
        }
        for (auto & x : result)
            x /= g;
        return result;
    }

    auto parse_multipliers(std::string_view text) -> std::vector<Rational>
    {
        auto bad = [&](const std::string & why) {
            return CertificateError(CertificateError::Kind::malformed_multiplier, "malformed multiplier list: " + why);
        };
        auto parse_int = [&](std::string_view digits) {
            if (digits.empty() || ! std::ranges::all_of(digits, [](char ch) { return ch >= '0' && ch <= '9'; }))
                throw bad("'" + std::string(digits) + "' is not a non-negative integer");
            return BigInt(std::string(digits));
        };

        std::vector<Rational> out;
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            auto slash = item.find('/');
            if (slash == std::string_view::npos)
                out.emplace_back(parse_int(item));
            else {
                auto den = parse_int(item.substr(slash + 1));
                if (den == 0)
                    throw bad("zero denominator");
                out.emplace_back(parse_int(item.substr(0, slash)), den);
            }
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return out;
    }

    auto to_string(const Rational & r) -> std::string
    {
        if (denominator(r) == 1)
            return numerator(r).str();
        return numerator(r).str() + "/" + denominator(r).str();
    }
}
