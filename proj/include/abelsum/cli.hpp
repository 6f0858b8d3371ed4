#ifndef ABELSUM_CLI_HPP
#define ABELSUM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "abelsum/lacasse.hpp"

namespace abelsum::cli {

/// Runs the full command line (args excludes the program name) writing to
/// the given streams. Returns the process exit code: 0 success / all checks
/// hold, 1 identity counterexample, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints per-record lines (when requested) plus the "held/total hold"
/// summary for a lacasse verification run and maps it to an exit code.
/// Split out so the counterexample path is testable with synthetic records.
int report_verification(const std::vector<lacasse::VerificationRecord>& records,
                        const std::string& format, bool emit_records, std::ostream& out,
                        std::ostream& err);

}  // namespace abelsum::cli

#endif
