#pragma once

#include "dicke/analysis.hpp"
#include "dicke/cli/config.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace dicke::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2, kRuntimeError = 3 };

/// Entry point shared by the `dicke` executable and the tests. `args[0]` is
/// the program name. Results go to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const ProtocolReport& report);
nlohmann::json to_json(const QslReport& report);

/// Eigen-report for `spectrum`: numerical eigenvalues, analytic eigenvalues of
/// the large-n operator, their deviation and the orthonormality residual.
nlohmann::json spectrum_report(std::int64_t spins, std::int64_t photons, const ModelParams& params, Model model);

}  // namespace dicke::cli
