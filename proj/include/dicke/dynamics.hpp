#pragma once

#include "dicke/hilbert.hpp"
#include "dicke/operators.hpp"
#include "dicke/spectra.hpp"

#include <Eigen/Dense>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dicke {

enum class Model { exact, large_n };

std::string_view model_name(Model model);
std::optional<Model> parse_model(std::string_view text);

enum class Observable { w_over_capacity, fidelity, entropy_spin1, concurrence, cos_theta, excitation, norm };

/// Canonical column order of a recorded series.
inline constexpr Observable kAllObservables[] = {
    Observable::w_over_capacity, Observable::fidelity, Observable::entropy_spin1, Observable::concurrence,
    Observable::cos_theta,       Observable::excitation, Observable::norm};

std::string_view observable_name(Observable obs);
std::optional<Observable> parse_observable(std::string_view text);

struct SimulationConfig {
  std::int64_t spins = 1;
  std::int64_t photons = 1;
  ModelParams params;
  Model model = Model::exact;
  double t_max = 1.0;
  int steps = 2;
  std::set<Observable> record{std::begin(kAllObservables), std::end(kAllObservables)};

  void validate() const;
};

/// Time samples plus one column per recorded observable. Columns that were
/// not requested stay empty.
struct ObservableSeries {
  std::vector<double> times;
  std::vector<double> w_over_capacity;
  std::vector<double> fidelity;
  std::vector<double> entropy_spin1;
  std::vector<double> concurrence;
  std::vector<double> cos_theta;
  std::vector<double> excitation;
  std::vector<double> norm;

  std::vector<double>& column(Observable obs);
  const std::vector<double>& column(Observable obs) const;
  bool has(Observable obs) const { return !column(obs).empty(); }
  std::size_t size() const { return times.size(); }
};

/// Amplitudes <- V exp(-i D t) V^T amplitudes.
SectorState evolve(const SectorState& state, const EigenSystem& eig, double t);

/// Operator that drives the chosen model on the sector (N, n).
TridiagonalOperator model_operator(const SectorBasis& basis, Model model, const ModelParams& params);

/// Precomputed spectral propagator from the initial all-down state. Sampling
/// is read-only, so one instance can be shared across threads.
class ChargingPropagator {
 public:
  ChargingPropagator(const SectorBasis& basis, Model model, const ModelParams& params);

  /// State at time t, honouring the switch-off time: after t_off only the
  /// (constant) non-interacting diagonal acts, which is a global phase.
  SectorState state_at(double t) const;

  const SectorBasis& basis() const { return basis_; }
  const TridiagonalOperator& op() const { return op_; }
  const EigenSystem& eigensystem() const { return eig_; }

 private:
  SectorBasis basis_;
  Model model_;
  ModelParams params_;
  TridiagonalOperator op_;
  EigenSystem eig_;
  Eigen::VectorXd initial_overlap_;
};

/// Uniform grid t_i = t_max i / (steps - 1); samples computed in parallel
/// (OpenMP) over the grid. Output is bit-identical to run_serial.
ObservableSeries run(const SimulationConfig& config);

/// Serial reference for run().
ObservableSeries run_serial(const SimulationConfig& config);

}  // namespace dicke
