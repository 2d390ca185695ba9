#ifndef IDCODE_CLI_HPP
#define IDCODE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace idcode {

// Whole command-line tool behind a testable entry point. args is argv
// without the program name. Exit codes: 0 success or positive decision,
// 1 negative decision, 2 usage or input errors, 3 budget exceeded.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace idcode

#endif
