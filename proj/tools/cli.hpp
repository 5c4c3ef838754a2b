#pragma once

#include <ostream>

namespace pancycle::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCounterexample = 2, kInconsistent = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pancycle::cli
