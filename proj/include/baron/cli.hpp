#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baron::cli
{
    /// Exit codes: the claim checked holds, is refuted, or could not be decided.
    enum ExitCode : int
    {
        holds = 0,
        refuted = 1,
        undecided = 2
    };

    /**
     * Runs one command line (without the program name). Machine-readable
     * key=value lines go to out; diagnostics and progress go to err.
     */
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
