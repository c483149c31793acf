#pragma once

/**
 * @file cli.hpp
 * @brief The posinv command line.
 *
 * Exit codes: 0 pass, 1 a check is false (with witness), 2 input error,
 * 3 precision exhausted, 4 internal inconsistency or method disagreement.
 * Flags can be set through POSINV_PRECISION_BITS, POSINV_MAX_PRECISION_BITS
 * and POSINV_REPORT.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace posinv {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInput = 2, kExitPrecision = 3, kExitInternal = 4 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posinv
