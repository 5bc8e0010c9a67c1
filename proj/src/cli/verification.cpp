#include "dicke/cli/verification.hpp"

#include "dicke/analysis.hpp"
#include "dicke/cli/csv_io.hpp"
#include "dicke/observables.hpp"
#include "dicke/oracle.hpp"
#include "dicke/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>

namespace dicke::cli {

namespace {

CheckResult make(std::string name, double residual, double threshold) {
  return {std::move(name), residual, threshold, residual <= threshold};
}

CheckResult flip_identities() {
  double worst = 0.0;
  for (std::int64_t n = 1; n <= 200; ++n) {
    const double expected = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    worst = std::max(worst, std::abs(verify_algebraic_identity(n) - expected));
  }
  return make("flip identity sums = (-1)^m, N <= 200", worst, 1e-12);
}

CheckResult polynomial_orthogonality() {
  double failures = 0.0;
  for (std::int64_t n = 1; n <= 30; ++n) {
    const PseudoHermiteFamily family = pseudo_hermite_family(n);
    for (std::int64_t j = 0; j <= n; ++j) {
      for (std::int64_t k = j; k <= n; ++k) {
        BigInt sum = 0;
        for (std::int64_t xi = 0; xi <= n; ++xi) sum += binomial(n, xi) * family(j, xi) * family(k, xi);
        BigInt expected = 0;
        if (j == k) {
          BigInt fk = 1;
          for (std::int64_t i = 2; i <= k; ++i) fk *= i;
          expected = (BigInt(1) << static_cast<unsigned>(n)) * fk * fk * binomial(n, k);
        }
        if (sum != expected) failures += 1.0;
      }
    }
  }
  return make("binomial-weighted orthogonality (exact), N <= 30", failures, 0.0);
}

CheckResult rodrigues() {
  double worst = 0.0;
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) worst = std::max(worst, rodrigues_residual(n, k));
  }
  return make("Rodrigues form residual, k <= N <= 10", worst, 1e-12);
}

CheckResult eigenvalues() {
  double worst = 0.0;
  ModelParams params;
  const std::int64_t photons = 100;
  for (std::int64_t n = 1; n <= 60; ++n) {
    const EigenSystem numeric = eigendecompose(large_n_matrix(n, params, photons));
    const Eigen::VectorXd analytic = analytic_eigenvalues(n, params.coupling, photons).reverse();
    const double unit = params.coupling * std::sqrt(static_cast<double>(photons));
    worst = std::max(worst, (numeric.eigenvalues - analytic).cwiseAbs().maxCoeff() / unit);
  }
  return make("analytic vs QL eigenvalues / (g sqrt n), N <= 60", worst, 1e-10);
}

CheckResult eigenvectors(bool corrupt) {
  double worst = 0.0;
  const auto norm = corrupt ? EigenvectorNormalization::printed_prefactor : EigenvectorNormalization::unit;
  for (std::int64_t n = 1; n <= 40; ++n) {
    worst = std::max(worst, orthonormality_residual(analytic_eigenvectors(n, norm)));
  }
  return make("analytic eigenvectors |V^T V - I|, N <= 40", worst, 1e-10);
}

CheckResult oracle_equivalence() {
  std::mt19937_64 rng(20240611);
  double worst = 0.0;
  ModelParams params;
  for (std::int64_t n_spins = 1; n_spins <= 3; ++n_spins) {
    for (std::int64_t n_photons = 1; n_photons <= 12; ++n_photons) {
      const ChargingPropagator sector(build_sector(n_spins, n_photons), Model::exact, params);
      const oracle::BruteForcePropagator brute(n_spins, n_photons, params);
      const double horizon = 3.0 * universal_flip_time(n_spins, params.coupling, n_photons);
      std::uniform_real_distribution<double> when(0.0, horizon);
      for (int sample = 0; sample < 5; ++sample) {
        const double t = when(rng);
        const SectorState s = sector.state_at(t);
        const oracle::FullState f = brute.state_at(t);
        worst = std::max(worst, (oracle::sector_amplitudes(f, n_photons) - s.amplitudes).cwiseAbs().maxCoeff());
        const SingleSpinDensity rho1 = oracle::single_spin_density(f, 0);
        worst = std::max(worst, (rho1.matrix - single_spin_density(s).matrix).cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(oracle::entropy(rho1) - von_neumann_entropy(single_spin_density(s))));
        if (n_spins >= 2) {
          const TwoSpinDensity rho2 = oracle::two_spin_density(f, 0, 1);
          worst = std::max(worst, (rho2.matrix - two_spin_density(s).matrix).cwiseAbs().maxCoeff());
          worst = std::max(worst,
                           std::abs(oracle::x_state_concurrence(rho2) - pairwise_concurrence(two_spin_density(s))));
        }
      }
    }
  }
  return make("sector vs brute-force full space, N <= 3, n <= 12", worst, 1e-8);
}

CheckResult excitation_conservation() {
  double worst = 0.0;
  ModelParams params;
  for (std::int64_t n_spins = 1; n_spins <= 4; ++n_spins) {
    const std::int64_t n_max = 8;
    const Eigen::MatrixXd h = oracle::brute_force_hamiltonian(n_spins, n_max, params, true);
    worst = std::max(worst, oracle::excitation_commutator_norm(h, n_spins, n_max));
  }
  return make("[H_TC, a^dag a + S_z] in full space, N <= 4", worst, 1e-12);
}

CheckResult unitarity() {
  SimulationConfig config;
  config.spins = 10;
  config.photons = 10'000;
  config.model = Model::exact;
  config.steps = 10'000;
  config.t_max = 10.0 * universal_flip_time(config.spins, 1.0, config.photons);
  config.record = {Observable::norm};
  const ObservableSeries series = run(config);
  double worst = 0.0;
  for (const double v : series.norm) worst = std::max(worst, std::abs(v - 1.0));
  return make("norm drift over 1e4 samples, N = 10, n = 1e4", worst, 1e-10);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  return {flip_identities(),    polynomial_orthogonality(),  rodrigues(),
          eigenvalues(),        eigenvectors(options.corrupt_normalization), oracle_equivalence(),
          excitation_conservation(), unitarity()};
}

void print_verification_table(const std::vector<CheckResult>& results, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
        << "  residual=" << format_number(r.residual) << "  threshold=" << format_number(r.threshold) << '\n';
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace dicke::cli
