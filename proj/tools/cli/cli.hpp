#pragma once

#include <cstdlib>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace dynatomic::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kExhausted = 3 };

/// Runs the command line args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::function<const char*(const char*)>& getenv_fn = [](const char* k) { return std::getenv(k); });

}  // namespace dynatomic::cli
