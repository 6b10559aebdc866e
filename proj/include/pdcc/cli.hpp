/* cli.hpp
 *
 * Command-line front end. cli_run parses argv-style arguments (without
 * the program name) and executes one subcommand; the canonical JSON
 * artifact goes to `out`, human-readable tables and diagnostics to `err`.
 * Returns 0 on success, 1 on verification failure, 2 on usage or input
 * errors.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdcc {

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pdcc
