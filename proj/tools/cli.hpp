#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rllsidc::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kData = 3,
    kVerification = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rllsidc::cli
