#pragma once

#include "dicke/dynamics.hpp"

#include <cstdint>

namespace dicke {

/// pi / (2 g sqrt(n)); the same for every spin count.
double universal_flip_time(std::int64_t spins, double coupling, std::int64_t photons);

struct FlipDetection {
  double time = 0.0;
  double fidelity = 0.0;
};

/// First local maximum of the fidelity column above 1/2, refined by a parabola
/// through the peak sample and its two neighbours. Throws NoFlipFound.
FlipDetection detect_flip_time(const ObservableSeries& series);

/// Amplitude sum from the flip condition written in the spectral basis,
/// evaluated at phase theta = g sqrt(n) t:
///   odd  N = 2m+1: sum_{k<=m} 2 C(N,k)/2^N (-1)^k sin((N-2k) theta)
///   even N = 2m:   sum_{k<m}  2 C(N,k)/2^N (-1)^k cos((N-2k) theta) + (-1)^m C(N,m)/2^N
/// It equals (-1)^m sin^N(theta). Binomial weights come from log-gamma for N > 50.
double flip_identity_sum(std::int64_t spins, double theta);

/// flip_identity_sum at theta = pi/2; should be (-1)^m.
double verify_algebraic_identity(std::int64_t spins);

struct ProtocolReport {
  std::int64_t spins = 0;
  std::int64_t photons_per_cavity = 0;
  double coupling = 0.0;
  double omega_a = 0.0;
  double tau_parallel = 0.0;
  double tau_collective = 0.0;
  double energy = 0.0;
  double power_parallel = 0.0;
  double power_collective = 0.0;
  double ratio = 0.0;
  double tau_detected_parallel = 0.0;
  double tau_detected_collective = 0.0;
  double fidelity_at_tau = 0.0;           ///< collective run
  double fidelity_at_tau_parallel = 0.0;  ///< single-spin run
  double detected_ratio = 0.0;            ///< tau_detected_parallel / tau_detected_collective
};

struct ProtocolOptions {
  Model model = Model::exact;
  int steps = 4001;
  double window_in_flip_times = 2.0;
};

/// Parallel: N cavities with n photons and one spin each. Collective: one
/// cavity with N spins and N n photons. Closed-form times and powers plus
/// detected flip times from both simulations.
ProtocolReport compare_protocols(std::int64_t spins, std::int64_t photons_per_cavity, double coupling,
                                 double omega_a, const ProtocolOptions& options = {});

struct QslReport {
  double qsl_parallel_paper = 0.0;    ///< pi / (4 N g sqrt(n))
  double qsl_collective_paper = 0.0;  ///< pi / (4 N g sqrt(n N))
  double variance_based_qsl = 0.0;    ///< pi / (2 dH), dH of the initial state under the collective H~
  double collective_energy_spread = 0.0;
  double parallel_energy_spread = 0.0;  ///< dH of one cavity's initial state, single spin, n photons
};

QslReport qsl_report(std::int64_t spins, std::int64_t photons_per_cavity, double coupling);

/// |tau_A / tau_B - 1| with tau_A the detected flip of N spins, N n photons,
/// coupling g and tau_B that of one spin, n photons, coupling g sqrt(N).
double effective_coupling_equivalence(std::int64_t spins, std::int64_t photons_per_cavity, double coupling,
                                      Model model = Model::exact, int steps = 4001);

/// Simulation window used by the analyses: [0, window * pi/(2 g sqrt(n))].
SimulationConfig flip_scan_config(std::int64_t spins, std::int64_t photons, double coupling, Model model,
                                  int steps, double window_in_flip_times);

}  // namespace dicke
