#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcgeom {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

// Runs one CLI invocation. `args` excludes the program name. Reports go to
// `out` (and to --out <path> when given), diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcgeom
