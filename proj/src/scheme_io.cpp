#include <baron/scheme_io.hpp>

#include <algorithm>
#include <cctype>
#include <optional>

namespace baron
{
    ParseError::ParseError(int line, int column, const std::string & message) :
        std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        _line(line),
        _column(column)
    {
    }

    namespace
    {
        class LineReader
        {
        public:
            LineReader(std::string_view text, int line_no) :
                _text(text),
                _line_no(line_no)
            {
            }

            auto at_end() const -> bool { return _pos == _text.size(); }
            auto column() const -> int { return static_cast<int>(_pos) + 1; }
            auto peek() const -> char { return at_end() ? '\0' : _text[_pos]; }

            [[noreturn]] auto fail(const std::string & message) const -> void
            {
                fail_at(column(), message);
            }

            [[noreturn]] auto fail_at(int col, const std::string & message) const -> void
            {
                throw ParseError(_line_no, col, message);
            }

            auto expect(char c, const char * what) -> void
            {
                if (peek() != c)
                    fail(std::string("expected ") + what);
                ++_pos;
            }

            auto integer() -> long long
            {
                if (! std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected an integer");
                long long value = 0;
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    value = value * 10 + (peek() - '0');
                    if (value > 1'000'000'000)
                        fail("integer too large");
                    ++_pos;
                }
                return value;
            }

            auto relation() -> Relation
            {
                switch (peek()) {
                case '<': ++_pos; return Relation::less;
                case '=': ++_pos; return Relation::equal;
                case '>': ++_pos; return Relation::greater;
                default: fail("expected one of '<', '=', '>'");
                }
            }

        private:
            std::string_view _text;
            int _line_no;
            std::size_t _pos = 0;
        };

        auto read_pan(LineReader & in, int n, std::vector<bool> & used) -> std::vector<CoinLabel>
        {
            std::vector<CoinLabel> pan;
            while (true) {
                int col = in.column();
                auto label = in.integer();
                if (label == 0 && pan.empty() && in.peek() != '+')
                    return pan; // a lone 0 is an empty pan
                if (label < 1 || label > n)
                    in.fail_at(col, "label " + std::to_string(label) + " out of range [1.." + std::to_string(n) + "]");
                if (used[label])
                    in.fail_at(col, "coin " + std::to_string(label) + " appears more than once in the weighing");
                used[label] = true;
                pan.push_back(static_cast<CoinLabel>(label));
                if (in.peek() != '+')
                    return pan;
                in.expect('+', "'+'");
            }
        }
    }

    auto parse_scheme(std::string_view text) -> Scheme
    {
        int line_no = 0;
        std::optional<int> n;
        std::vector<Weighing> weighings;

        std::size_t start = 0;
        while (start < text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(start, end - start);
            start = end + 1;
            ++line_no;

            LineReader in(line, line_no);
            if (! n) {
                in.expect('n', "header \"n <count>\"");
                in.expect(' ', "single space after 'n'");
                auto count = in.integer();
                if (! in.at_end())
                    in.fail("unexpected characters after header");
                if (count < 1)
                    throw ParseError(line_no, 3, "n must be positive");
                n = static_cast<int>(count);
                continue;
            }

            if (line.empty() || line.front() == '#')
                continue;

            std::vector<bool> used(*n + 1, false);
            auto left = read_pan(in, *n, used);
            in.expect(' ', "single space before relation");
            auto rel = in.relation();
            in.expect(' ', "single space after relation");
            auto right = read_pan(in, *n, used);
            if (! in.at_end())
                in.fail("unexpected characters after weighing");
            if (left.empty() && right.empty())
                in.fail_at(1, "both pans are empty");
            weighings.emplace_back(std::move(left), std::move(right), rel);
        }

        if (! n)
            throw ParseError(1, 1, "missing header \"n <count>\"");
        return Scheme{*n, std::move(weighings)};
    }

    auto format_weighing(const Weighing & w) -> std::string
    {
        std::string out;
        auto pan = [&](std::span<const CoinLabel> coins) {
            if (coins.empty())
                out += '0';
            for (std::size_t i = 0; i < coins.size(); ++i) {
                if (i)
                    out += '+';
                out += std::to_string(coins[i]);
            }
        };
        pan(w.left());
        out += ' ';
        out += relation_symbol(w.outcome());
        out += ' ';
        pan(w.right());
        return out;
    }

    auto serialize_scheme(const Scheme & s) -> std::string
    {
        std::string out = "n " + std::to_string(s.n()) + "\n";
        for (const auto & w : s.weighings()) {
            out += format_weighing(w);
            out += '\n';
        }
        return out;
    }
}
