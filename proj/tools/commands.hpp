#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zetaval::cli {

/// Exit codes: 0 success, 2 usage or domain error, 1 internal failure or a
/// failed verification check.
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. `default_prec` is the
/// value of the precision environment variable, used only when --prec is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& default_prec = std::nullopt);

} // namespace zetaval::cli
