// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "umbral/identities.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace dobell {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,  ///< an identity failed or an evaluation hit a pole
    kUsage = 2,
};

/// Runs one invocation. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Same, with harness options forwarded to `verify`. Tests use it to inject a
/// perturbation and observe the failure path end to end.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        const umbral::VerifyOptions& verify_options);

} // namespace dobell
