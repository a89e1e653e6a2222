#ifndef STATCORE_CLI_H
#define STATCORE_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "statcore/transforms.h"

namespace statcore {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Entry point of the `statcore` tool. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "(1 -1 1 -1, 1 -1 1 -1)": space separated, a comma after every fourth entry.
std::string format_vector(const LogicalVector &vec);

}  // namespace statcore

#endif
