#ifndef TURANLAB_CLI_HPP
#define TURANLAB_CLI_HPP

/// \file cli.hpp
/// \brief The turanlab command line, callable in-process.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

/// Exit codes shared by every subcommand.
enum ExitCode : int { exit_ok = 0, exit_false = 1, exit_usage = 2, exit_undecided = 3 };

/// Resolves a graph argument: path:L, cycle:L, clique:K, g6:<graph6>,
/// expr:<expression>, family:<name>(params), file:<path> (graph6 lines), or
/// a bare construction expression.  Throws std::invalid_argument (or one of
/// its subclasses) on bad input.
std::vector<Graph> resolve_graphs(std::string_view spec);

/// args excludes the program name.  Output goes to `out`, diagnostics to
/// `err`; the return value is an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turanlab

#endif  // TURANLAB_CLI_HPP
