#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ebband::cli {

enum ExitCode : int {
    kOk = 0,
    kBadArguments = 1,
    kIoError = 2,
    kCheckFailed = 3,
};

/// Entry point shared by the ebband executable and the tests.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ebband::cli
