/**
 * @file cli.hpp
 * @brief Command implementations behind the levi-gauge executable.
 *
 * Exit code contract: 0 on success, 1 when a numerical certification gate
 * fails (positive-eigenvalue or slope target), 2 on usage or validation
 * errors. The functions print to the given streams and never throw; they
 * are callable from tests without spawning a process.
 */
#ifndef LEVIGAUGE_CLI_HPP
#define LEVIGAUGE_CLI_HPP

#include "levigauge/report.hpp"

#include <iosfwd>
#include <string>

namespace levigauge {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsageError = 2;

/// Prints exact indices and curve bounds; writes JSON when out_path is set.
int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs the delta-ladder certification; writes JSON when out_path is set.
/// A partial report is still written when a gate fails.
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Prints the exact contact order of one curve ("a1,...,an" or "canonical").
int run_curve(const RunConfig& config, const std::string& curve_arg, std::ostream& out,
              std::ostream& err);

/// Writes the full bundle document to out_path and prints a summary line.
int run_report(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace levigauge

#endif  // LEVIGAUGE_CLI_HPP
