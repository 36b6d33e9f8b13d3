#pragma once

#include <baron/model.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace baron
{
    /// Malformed scheme text. Line and column are 1-based.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(int line, int column, const std::string & message);

        auto line() const -> int { return _line; }
        auto column() const -> int { return _column; }

    private:
        int _line;
        int _column;
    };

    /**
     * Reads the scheme file format:
     *
     *     n 6
     *     # comment
     *     1+2+3 = 6
     *     1+6 < 3+5
     *
     * The header must be the first line. Comment and blank lines may follow
     * anywhere after it. A pan written as a lone 0 is empty.
     */
    auto parse_scheme(std::string_view text) -> Scheme;

    /// Canonical form: header, one weighing per line, ascending coins, LF endings.
    auto serialize_scheme(const Scheme & s) -> std::string;

    /// A single weighing in canonical form, without the line ending.
    auto format_weighing(const Weighing & w) -> std::string;
}
