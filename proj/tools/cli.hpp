#ifndef LINKED_TOOLS_CLI_HPP
#define LINKED_TOOLS_CLI_HPP

#include "linked/connectivity.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace linked::cli {

enum ExitCode : int {
    exit_linked = 0,
    exit_not_linked = 1,
    exit_error = 2,
    exit_disagreement = 3,
};

// Entry point shared by the binary and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GraphInput {
    ConnectivityGraph graph;
    std::vector<std::string> names; // empty: use default names
};

// Edge list ("u v" per line, 0-based ids, '#' comments) or an undirected DOT
// graph as written by export_dot. `min_vertices` pads the vertex count for
// isolated trailing vertices in edge lists.
GraphInput parse_graph_input(std::string_view text, std::size_t min_vertices = 0);

} // namespace linked::cli

#endif
