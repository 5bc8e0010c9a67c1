#include "dicke/dynamics.hpp"

#include "dicke/errors.hpp"
#include "dicke/observables.hpp"

#include <cmath>
#include <complex>

namespace dicke {

std::string_view model_name(Model model) {
  return model == Model::exact ? "exact" : "large-n";
}

std::optional<Model> parse_model(std::string_view text) {
  if (text == "exact") return Model::exact;
  if (text == "large-n" || text == "large_n") return Model::large_n;
  return std::nullopt;
}

std::string_view observable_name(Observable obs) {
  switch (obs) {
    case Observable::w_over_capacity: return "W_over_capacity";
    case Observable::fidelity: return "fidelity";
    case Observable::entropy_spin1: return "entropy_spin1";
    case Observable::concurrence: return "concurrence";
    case Observable::cos_theta: return "cos_theta";
    case Observable::excitation: return "excitation";
    case Observable::norm: return "norm";
  }
  return "";
}

std::optional<Observable> parse_observable(std::string_view text) {
  for (const Observable obs : kAllObservables) {
    if (observable_name(obs) == text) return obs;
  }
  return std::nullopt;
}

void SimulationConfig::validate() const {
  params.validate();
  (void)SectorBasis(spins, photons);
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidArgument("t_max must be positive");
  if (steps < 2) throw InvalidArgument("steps must be >= 2");
  if (record.empty()) throw InvalidArgument("no observables requested");
}

std::vector<double>& ObservableSeries::column(Observable obs) {
  return const_cast<std::vector<double>&>(std::as_const(*this).column(obs));
}

const std::vector<double>& ObservableSeries::column(Observable obs) const {
  switch (obs) {
    case Observable::w_over_capacity: return w_over_capacity;
    case Observable::fidelity: return fidelity;
    case Observable::entropy_spin1: return entropy_spin1;
    case Observable::concurrence: return concurrence;
    case Observable::cos_theta: return cos_theta;
    case Observable::excitation: return excitation;
    case Observable::norm: return norm;
  }
  return norm;
}

SectorState evolve(const SectorState& state, const EigenSystem& eig, double t) {
  if (state.amplitudes.size() != eig.dimension()) {
    throw DimensionMismatch("eigensystem does not match state dimension");
  }
  if (!(t >= 0.0)) throw InvalidArgument("evolution time must be >= 0");
  if (t == 0.0) return state;
  Eigen::VectorXcd coeffs = eig.eigenvectors.transpose().cast<std::complex<double>>() * state.amplitudes;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    coeffs[j] *= std::polar(1.0, -eig.eigenvalues[j] * t);
  }
  return SectorState{state.basis, eig.eigenvectors.cast<std::complex<double>>() * coeffs};
}

TridiagonalOperator model_operator(const SectorBasis& basis, Model model, const ModelParams& params) {
  if (model == Model::exact) return exact_tc_matrix(basis, params);
  if (!basis.full_charge_reachable()) {
    throw InvalidArgument("large-n model needs n >= N (its sector has dimension N + 1)");
  }
  return large_n_matrix(basis.spins(), params, basis.photons());
}

ChargingPropagator::ChargingPropagator(const SectorBasis& basis, Model model, const ModelParams& params)
    : basis_(basis),
      model_(model),
      params_(params),
      op_(model_operator(basis, model, params)),
      eig_(eigendecompose(op_)),
      initial_overlap_(eig_.eigenvectors.row(0).transpose()) {}

SectorState ChargingPropagator::state_at(double t) const {
  if (!(t >= 0.0)) throw InvalidArgument("evolution time must be >= 0");
  if (t == 0.0) return initial_state(basis_);
  const double coupled = std::min(t, params_.t_off);
  const Eigen::Index dim = eig_.dimension();
  Eigen::VectorXcd phased(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    phased[j] = initial_overlap_[j] * std::polar(1.0, -eig_.eigenvalues[j] * coupled);
  }
  SectorState out{basis_, eig_.eigenvectors.cast<std::complex<double>>() * phased};
  if (t > coupled && model_ == Model::exact) {
    out.amplitudes *= std::polar(1.0, -basis_.excitation_number() * params_.omega * (t - coupled));
  }
  return out;
}

namespace {

struct SeriesBuilder {
  const SimulationConfig& config;
  ChargingPropagator propagator;
  std::optional<SectorState> target;
  ObservableSeries series;

  explicit SeriesBuilder(const SimulationConfig& cfg)
      : config((cfg.validate(), cfg)),
        propagator(SectorBasis(cfg.spins, cfg.photons), cfg.model, cfg.params) {
    const SectorBasis& basis = propagator.basis();
    if (basis.full_charge_reachable()) target = target_state(basis);
    const auto steps = static_cast<std::size_t>(cfg.steps);
    series.times.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) {
      series.times[i] = cfg.t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    for (const Observable obs : cfg.record) series.column(obs).assign(steps, 0.0);
  }

  void sample(std::size_t i) {
    const SectorState state = propagator.state_at(series.times[i]);
    const double spins = static_cast<double>(config.spins);
    for (const Observable obs : config.record) {
      double value = 0.0;
      switch (obs) {
        case Observable::w_over_capacity: value = stored_energy(state, 1.0) / spins; break;
        case Observable::fidelity: value = target ? flip_fidelity(state, *target) : 0.0; break;
        case Observable::entropy_spin1: value = von_neumann_entropy(single_spin_density(state)); break;
        case Observable::concurrence:
          // A lone spin has no partner to be entangled with.
          value = config.spins >= 2 ? pairwise_concurrence(two_spin_density(state)) : 0.0;
          break;
        case Observable::cos_theta: value = dicke::cos_theta(state); break;
        case Observable::excitation: value = excitation_number(state); break;
        case Observable::norm: value = state.norm(); break;
      }
      series.column(obs)[i] = value;
    }
  }
};

}  // namespace

ObservableSeries run(const SimulationConfig& config) {
  SeriesBuilder builder(config);
  const auto steps = static_cast<std::int64_t>(builder.series.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < steps; ++i) builder.sample(static_cast<std::size_t>(i));
  return std::move(builder.series);
}

ObservableSeries run_serial(const SimulationConfig& config) {
  SeriesBuilder builder(config);
  for (std::size_t i = 0; i < builder.series.size(); ++i) builder.sample(i);
  return std::move(builder.series);
}

}  // namespace dicke
