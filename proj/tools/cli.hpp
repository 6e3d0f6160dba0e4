#ifndef JETPROLONG_TOOLS_CLI_HPP
#define JETPROLONG_TOOLS_CLI_HPP

#include <iosfwd>

namespace jetprolong::cli
{

// Exit codes: 0 success, 1 engines disagree or a suite failed, 2 usage error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace jetprolong::cli

#endif
