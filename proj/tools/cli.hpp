#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace genuskit::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kResourceLimit = 2, kInternalError = 3 };

/// Runs one command. `args` excludes the program name. `env_cap` is the
/// value of GENUSKIT_CAP, if set; --cap takes precedence over it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_cap = std::nullopt);

}  // namespace genuskit::cli
