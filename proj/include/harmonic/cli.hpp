#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonic {

// Runs one command (argv without the program name). The JSON report goes to
// out, the human summary to err. Returns the process exit code: 0 verified
// or observed, 1 falsified, 2 operational error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmonic
