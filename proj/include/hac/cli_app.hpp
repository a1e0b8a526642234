#ifndef HAC_CLI_APP_HPP
#define HAC_CLI_APP_HPP

#include <string>
#include <vector>

namespace hac {

/// Runs the full command-line interface; returns the process exit code.
/// Factored out of main() so the tests can drive it directly.
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, char** argv);

}  // namespace hac

#endif
