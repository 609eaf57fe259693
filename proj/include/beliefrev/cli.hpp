#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beliefrev::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. The report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beliefrev::cli
