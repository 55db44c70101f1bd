#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcx::cli {

// Exit codes: 0 no violation / all scenarios match, 1 violation / mismatch
// (report still written), 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcx::cli
