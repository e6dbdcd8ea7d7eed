#ifndef ENABLING_CLI_HH
#define ENABLING_CLI_HH

#include <enabling/graph.hh>

#include <iosfwd>
#include <string>
#include <vector>

namespace enabling
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_negative = 1,
        exit_usage = 2,
        exit_internal = 3
    };

    /// 0 red, 1 blue, 2 green, 3 yellow, then HSV hues spaced by the golden ratio.
    auto palette_colour(Colour c) -> std::string;

    auto to_dot(const EdgeColouredGraph & g) -> std::string;

    /// Runs one subcommand. args excludes the program name. Structured output
    /// goes to out, diagnostics to err.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
