#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bincert {

// Parses and executes one command line (argv[0] excluded). Reports, tables,
// and error messages all go to `out` unless --out redirects the table to a
// file. Returns the process exit code:
//   0  everything certified Holds (gate-skipped claims allowed)
//   1  malformed arguments or unusable configuration
//   2  at least one claim Violated
//   3  Undecided claims remain at the deepest refinement
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace bincert
