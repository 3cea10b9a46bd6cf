#ifndef KOSZUL_CLI_HPP
#define KOSZUL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace koszul {

/// Dispatches one CLI invocation. Exit status 0 = success/PASS, 1 =
/// mathematical FAIL (with counterexample), 2 = usage/format error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace koszul

#endif
