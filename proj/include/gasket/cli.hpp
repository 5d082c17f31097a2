#pragma once

#include <iosfwd>

namespace gasket::cli {

enum ExitCode : int {
  kOk = 0,
  kCertifiedFailure = 1,
  kUsage = 2,
  kPrecondition = 3,
};

/// Entry point of the `gasket` tool; writes reports to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gasket::cli
