// Command-line front end. Exit codes: 0 holds / valid / checks, 1 fails /
// countermodel / proof error, 2 usage or input error.

#ifndef AWAREKIT_CLI_HPP_
#define AWAREKIT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace awarekit {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, without the program name: run_cli({"valid", "K p -> p"}, ...).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace awarekit

#endif  // AWAREKIT_CLI_HPP_
