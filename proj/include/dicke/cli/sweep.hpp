#pragma once

#include "dicke/dynamics.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dicke::cli {

/// Grid points are either spins x photons (Cartesian, spins outer) or, when
/// photons_per_spin is set, (N, photons_per_spin * N) for each N.
struct SweepGrid {
  std::vector<std::int64_t> spins;
  std::vector<std::int64_t> photons;
  std::optional<std::int64_t> photons_per_spin;

  std::vector<std::pair<std::int64_t, std::int64_t>> points() const;
};

struct SweepSettings {
  ModelParams params;
  Model model = Model::exact;
  int steps = 2000;
  double window_in_flip_times = 3.0;
};

struct SweepRow {
  std::int64_t spins = 0;
  std::int64_t photons = 0;
  double tau_analytic = 0.0;
  double tau_detected = 0.0;
  double peak_fidelity = 0.0;
  /// Flip time of one spin with n/N photons over the detected collective flip time.
  double power_ratio = 0.0;
  std::string status = "ok";
};

/// One simulation per grid point; points run concurrently, rows come back in grid order.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, const SweepSettings& settings);

/// Serial reference for run_sweep.
std::vector<SweepRow> run_sweep_serial(const SweepGrid& grid, const SweepSettings& settings);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace dicke::cli
