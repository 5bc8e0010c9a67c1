#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dicke::cli {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  /// Negative control: build the analytic eigenvectors with the 1/2^N prefactor
  /// instead of the unit-norm one. The orthonormality check must then fail.
  bool corrupt_normalization = false;
};

/// Algebraic flip identities (N <= 200), exact polynomial orthogonality (N <= 30),
/// Rodrigues form (N <= 10), analytic spectra (eigenvalues N <= 60, vectors N <= 40),
/// brute-force equivalence (N <= 3, n <= 12), excitation conservation and unitarity.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

/// One line per check: name, residual, threshold, PASS/FAIL.
void print_verification_table(const std::vector<CheckResult>& results, std::ostream& out);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dicke::cli
