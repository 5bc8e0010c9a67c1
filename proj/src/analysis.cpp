#include "dicke/analysis.hpp"

#include "dicke/errors.hpp"
#include "dicke/observables.hpp"

#include <cmath>
#include <numbers>

namespace dicke {

double universal_flip_time(std::int64_t spins, double coupling, std::int64_t photons) {
  if (spins < 1 || photons < 1) throw InvalidArgument("need N >= 1 and n >= 1");
  if (!(coupling > 0.0)) throw InvalidArgument("coupling must be positive");
  return std::numbers::pi / (2.0 * coupling * std::sqrt(static_cast<double>(photons)));
}

FlipDetection detect_flip_time(const ObservableSeries& series) {
  const auto& f = series.fidelity;
  const auto& t = series.times;
  if (f.size() != t.size()) throw InvalidArgument("series does not record fidelity");
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    if (!(f[i] > 0.5 && f[i] > f[i - 1] && f[i] >= f[i + 1])) continue;
    // Vertex of the parabola through (t[i-1], f[i-1]), (t[i], f[i]), (t[i+1], f[i+1]).
    const double h0 = t[i] - t[i - 1];
    const double h1 = t[i + 1] - t[i];
    const double d0 = (f[i] - f[i - 1]) / h0;
    const double d1 = (f[i + 1] - f[i]) / h1;
    const double curvature = (d1 - d0) / (h0 + h1);  // half the second derivative
    if (!(curvature < 0.0)) return {t[i], f[i]};
    const double slope_mid = d0 + curvature * h0;  // derivative at t[i]
    const double shift = -slope_mid / (2.0 * curvature);
    return {t[i] + shift, f[i] + slope_mid * shift + curvature * shift * shift};
  }
  throw NoFlipFound();
}

namespace {

double binomial_weight(std::int64_t n, std::int64_t k) {
  // C(n, k) / 2^n
  if (n <= 50) return std::ldexp(binomial(n, k).convert_to<double>(), -static_cast<int>(n));
  const double log_weight = std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                            std::lgamma(static_cast<double>(n - k) + 1.0) - static_cast<double>(n) * std::numbers::ln2;
  return std::exp(log_weight);
}

}  // namespace

double flip_identity_sum(std::int64_t spins, double theta) {
  if (spins < 1) throw InvalidArgument("N must be >= 1");
  const std::int64_t m = spins / 2;
  double sum = 0.0;
  if (spins % 2 == 1) {
    for (std::int64_t k = 0; k <= m; ++k) {
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      sum += 2.0 * binomial_weight(spins, k) * sign * std::sin(static_cast<double>(spins - 2 * k) * theta);
    }
  } else {
    for (std::int64_t k = 0; k < m; ++k) {
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      sum += 2.0 * binomial_weight(spins, k) * sign * std::cos(static_cast<double>(spins - 2 * k) * theta);
    }
    sum += (m % 2 == 0 ? 1.0 : -1.0) * binomial_weight(spins, m);
  }
  return sum;
}

double verify_algebraic_identity(std::int64_t spins) {
  return flip_identity_sum(spins, std::numbers::pi / 2.0);
}

SimulationConfig flip_scan_config(std::int64_t spins, std::int64_t photons, double coupling, Model model,
                                  int steps, double window_in_flip_times) {
  SimulationConfig config;
  config.spins = spins;
  config.photons = photons;
  config.params.coupling = coupling;
  config.model = model;
  config.t_max = window_in_flip_times * universal_flip_time(spins, coupling, photons);
  config.steps = steps;
  config.record = {Observable::fidelity};
  return config;
}

ProtocolReport compare_protocols(std::int64_t spins, std::int64_t photons_per_cavity, double coupling,
                                 double omega_a, const ProtocolOptions& options) {
  if (spins < 1 || photons_per_cavity < 1) throw InvalidArgument("need N >= 1 and n >= 1");
  if (!(omega_a > 0.0)) throw InvalidArgument("omega_a must be positive");
  const std::int64_t collective_photons = spins * photons_per_cavity;

  ProtocolReport report;
  report.spins = spins;
  report.photons_per_cavity = photons_per_cavity;
  report.coupling = coupling;
  report.omega_a = omega_a;
  report.tau_parallel = universal_flip_time(1, coupling, photons_per_cavity);
  report.tau_collective = universal_flip_time(spins, coupling, collective_photons);
  report.energy = static_cast<double>(spins) * omega_a;
  report.power_parallel = average_power(report.energy, report.tau_parallel);
  report.power_collective = average_power(report.energy, report.tau_collective);
  report.ratio = std::sqrt(static_cast<double>(spins));

  SimulationConfig parallel = flip_scan_config(1, photons_per_cavity, coupling, options.model, options.steps,
                                               options.window_in_flip_times);
  parallel.params.omega = omega_a;
  SimulationConfig collective = flip_scan_config(spins, collective_photons, coupling, options.model, options.steps,
                                                 options.window_in_flip_times);
  collective.params.omega = omega_a;

  const FlipDetection par = detect_flip_time(run(parallel));
  const FlipDetection col = detect_flip_time(run(collective));
  report.tau_detected_parallel = par.time;
  report.tau_detected_collective = col.time;
  report.fidelity_at_tau_parallel = par.fidelity;
  report.fidelity_at_tau = col.fidelity;
  report.detected_ratio = par.time / col.time;
  return report;
}

QslReport qsl_report(std::int64_t spins, std::int64_t photons_per_cavity, double coupling) {
  if (spins < 1 || photons_per_cavity < 1) throw InvalidArgument("need N >= 1 and n >= 1");
  const double n = static_cast<double>(photons_per_cavity);
  const double big_n = static_cast<double>(spins);
  QslReport report;
  report.qsl_parallel_paper = std::numbers::pi / (4.0 * big_n * coupling * std::sqrt(n));
  report.qsl_collective_paper = std::numbers::pi / (4.0 * big_n * coupling * std::sqrt(n * big_n));

  ModelParams params;
  params.coupling = coupling;
  const std::int64_t collective_photons = spins * photons_per_cavity;
  const TridiagonalOperator collective = large_n_matrix(spins, params, collective_photons);
  report.collective_energy_spread =
      energy_variance(initial_state(build_sector(spins, collective_photons)), collective);
  report.variance_based_qsl = std::numbers::pi / (2.0 * report.collective_energy_spread);

  const TridiagonalOperator single = large_n_matrix(1, params, photons_per_cavity);
  report.parallel_energy_spread = energy_variance(initial_state(build_sector(1, photons_per_cavity)), single);
  return report;
}

double effective_coupling_equivalence(std::int64_t spins, std::int64_t photons_per_cavity, double coupling,
                                      Model model, int steps) {
  if (spins < 1 || photons_per_cavity < 1) throw InvalidArgument("need N >= 1 and n >= 1");
  const std::int64_t collective_photons = spins * photons_per_cavity;
  const double boosted = coupling * std::sqrt(static_cast<double>(spins));

  const SimulationConfig collective = flip_scan_config(spins, collective_photons, coupling, model, steps, 2.0);
  const SimulationConfig single = flip_scan_config(1, photons_per_cavity, boosted, model, steps, 2.0);
  const double tau_a = detect_flip_time(run(collective)).time;
  const double tau_b = detect_flip_time(run(single)).time;
  return std::abs(tau_a / tau_b - 1.0);
}

}  // namespace dicke
