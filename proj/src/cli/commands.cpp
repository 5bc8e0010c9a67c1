#include "dicke/cli/commands.hpp"

#include "dicke/cli/csv_io.hpp"
#include "dicke/cli/sweep.hpp"
#include "dicke/cli/verification.hpp"
#include "dicke/errors.hpp"
#include "dicke/spectra.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace dicke::cli {

namespace {

using nlohmann::json;

json number(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json vector_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(number(v[i]));
  return arr;
}

/// Flag values collected by CLI11, keyed like the config file.
struct FlagValues {
  std::string config_path;
  std::string out_path;
  std::map<std::string, std::string> values;

  ParameterSet resolve() const {
    ParameterSet params = config_path.empty() ? ParameterSet{} : load_config(config_path);
    params.merge(ParameterSet(values));
    return params;
  }
};

void add_flag(CLI::App* app, FlagValues& flags, const std::string& flag, const std::string& key,
              const std::string& help) {
  app->add_option_function<std::string>(
      flag, [&flags, key](const std::string& v) { flags.values[key] = v; }, help);
}

void add_common(CLI::App* app, FlagValues& flags) {
  app->add_option("--config", flags.config_path, "Path to a key = value configuration file");
  app->add_option("--out", flags.out_path, "Write the result to this path instead of standard output");
  add_flag(app, flags, "--spins", "spins", "Number of two-level systems N");
  add_flag(app, flags, "--photons", "photons", "Initial cavity photon number n");
  add_flag(app, flags, "--coupling", "coupling", "Spin-cavity coupling g");
  add_flag(app, flags, "--omega", "omega", "Resonance frequency omega_c = omega_a");
  add_flag(app, flags, "--model", "model", "exact | large-n");
  add_flag(app, flags, "--steps", "steps", "Number of time samples (>= 2)");
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

void write_manifest(const std::string& command, const ParameterSet& params, const std::string& out_path,
                    double seconds) {
  if (out_path.empty()) return;
  json manifest;
  manifest["command"] = command;
  manifest["parameters"] = params.values();
  manifest["outputs"] = json::array({out_path});
  manifest["tool_version"] = DICKE_VERSION;
  manifest["wall_clock_seconds"] = seconds;
  manifest["units"] = {{"entropy", "nats"}, {"energy", "hbar = 1"}};
  std::ofstream file(out_path + ".manifest.json", std::ios::binary);
  if (!file) throw std::runtime_error("cannot write manifest for '" + out_path + "'");
  file << manifest.dump(2) << '\n';
}

std::string simulate(const ParameterSet& params) {
  const SimulationConfig config = simulation_config(params);
  std::ostringstream csv;
  write_series_csv(run(config), csv);
  return csv.str();
}

std::string spectrum(const ParameterSet& params) {
  const std::int64_t spins = params.require_integer("spins");
  const std::int64_t photons = params.require_integer("photons");
  if (spins < 1 || photons < 1) throw ConfigError("spins and photons must be >= 1");
  return spectrum_report(spins, photons, model_params(params), model(params)).dump(2) + "\n";
}

std::string compare(const ParameterSet& params) {
  const std::int64_t spins = params.require_integer("spins");
  const std::int64_t photons = params.require_integer("photons");
  if (spins < 1 || photons < 1) throw ConfigError("spins and photons must be >= 1");
  const ModelParams mp = model_params(params);
  ProtocolOptions options;
  options.model = model(params);
  if (auto steps = params.integer("steps")) {
    if (*steps < 3) throw ConfigError("steps must be >= 3");
    options.steps = static_cast<int>(*steps);
  }
  if (auto window = params.real("window")) options.window_in_flip_times = *window;
  json report = to_json(compare_protocols(spins, photons, mp.coupling, mp.omega, options));
  report["qsl"] = to_json(qsl_report(spins, photons, mp.coupling));
  return report.dump(2) + "\n";
}

std::string sweep(const ParameterSet& params) {
  SweepGrid grid;
  grid.spins = params.integer_list("spins_list");
  grid.photons = params.integer_list("photons_list");
  if (params.has("photons_per_spin")) grid.photons_per_spin = params.integer("photons_per_spin");
  SweepSettings settings;
  settings.params = model_params(params);
  settings.model = model(params);
  if (auto steps = params.integer("steps")) {
    if (*steps < 3) throw ConfigError("steps must be >= 3");
    settings.steps = static_cast<int>(*steps);
  }
  if (auto window = params.real("window")) {
    if (!(*window > 0.0)) throw ConfigError("window must be positive");
    settings.window_in_flip_times = *window;
  }
  const auto rows = run_sweep(grid, settings);
  const bool all_failed =
      !rows.empty() && std::none_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.status == "ok"; });
  std::ostringstream csv;
  write_sweep_csv(rows, csv);
  if (all_failed) throw std::runtime_error("every sweep point failed\n" + csv.str());
  return csv.str();
}

using Producer = std::function<std::string(const ParameterSet&)>;

Producer producer_for(const std::string& command) {
  if (command == "simulate") return simulate;
  if (command == "spectrum") return spectrum;
  if (command == "compare") return compare;
  if (command == "sweep") return sweep;
  throw ConfigError("command '" + command + "' cannot be re-run from a manifest");
}

int execute(const std::string& command, const ParameterSet& params, const std::string& out_path,
            std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = producer_for(command)(params);
  write_text(out_path, text, out);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_manifest(command, params, out_path, seconds);
  return kSuccess;
}

}  // namespace

json to_json(const ProtocolReport& r) {
  return json{{"N", r.spins},
              {"n_per_cavity", r.photons_per_cavity},
              {"g", number(r.coupling)},
              {"omega_a", number(r.omega_a)},
              {"tau_parallel", number(r.tau_parallel)},
              {"tau_collective", number(r.tau_collective)},
              {"W", number(r.energy)},
              {"P_parallel", number(r.power_parallel)},
              {"P_collective", number(r.power_collective)},
              {"ratio", number(r.ratio)},
              {"tau_detected_parallel", number(r.tau_detected_parallel)},
              {"tau_detected_collective", number(r.tau_detected_collective)},
              {"detected_ratio", number(r.detected_ratio)},
              {"fidelity_at_tau", number(r.fidelity_at_tau)},
              {"fidelity_at_tau_parallel", number(r.fidelity_at_tau_parallel)}};
}

json to_json(const QslReport& r) {
  return json{{"qsl_parallel_paper", number(r.qsl_parallel_paper)},
              {"qsl_collective_paper", number(r.qsl_collective_paper)},
              {"variance_based_qsl", number(r.variance_based_qsl)},
              {"collective_energy_spread", number(r.collective_energy_spread)},
              {"parallel_energy_spread", number(r.parallel_energy_spread)}};
}

json spectrum_report(std::int64_t spins, std::int64_t photons, const ModelParams& params, Model model) {
  const SectorBasis basis = build_sector(spins, photons);
  const TridiagonalOperator op = model_operator(basis, model, params);
  const EigenSystem eig = eigendecompose(op);
  const double shift = model == Model::exact ? params.omega * basis.excitation_number() : 0.0;
  const double unit = params.coupling * std::sqrt(static_cast<double>(photons));

  json report;
  report["N"] = spins;
  report["n"] = photons;
  report["g"] = params.coupling;
  report["omega"] = params.omega;
  report["model"] = std::string(model_name(model));
  report["diagonal_shift"] = shift;
  report["numerical_eigenvalues"] = vector_json(eig.eigenvalues);
  report["orthonormality_residual"] = orthonormality_residual(eig.eigenvectors);
  report["eigen_residual"] = eigen_residual(op, eig);

  const Eigen::VectorXd analytic = analytic_eigenvalues(spins, params.coupling, photons).reverse();
  report["analytic_eigenvalues"] = vector_json(analytic);
  if (analytic.size() == eig.dimension()) {
    const Eigen::VectorXd shifted = eig.eigenvalues.array() - shift;
    const double deviation = (shifted - analytic).cwiseAbs().maxCoeff();
    report["max_deviation"] = deviation;
    report["max_relative_deviation"] = deviation / (unit * static_cast<double>(spins));
  } else {
    // Sector truncated by the photon number; no one-to-one comparison.
    report["max_deviation"] = nullptr;
    report["max_relative_deviation"] = nullptr;
  }
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-diagonalization toolkit for collective charging of a Dicke quantum battery", "dicke"};
  app.require_subcommand(1);

  FlagValues sim_flags, spec_flags, cmp_flags, sweep_flags;
  auto* sim = app.add_subcommand("simulate", "Time series of charging observables (CSV)");
  add_common(sim, sim_flags);
  add_flag(sim, sim_flags, "--t-max", "t_max", "End of the uniform time grid");
  add_flag(sim, sim_flags, "--t-off", "t_off", "Time at which the coupling is switched off");
  add_flag(sim, sim_flags, "--observables", "observables", "Comma-separated observable names (default: all)");

  auto* spec = app.add_subcommand("spectrum", "Numerical and analytic eigenvalues (JSON)");
  add_common(spec, spec_flags);

  auto* cmp = app.add_subcommand("compare", "Parallel vs collective charging report (JSON)");
  add_common(cmp, cmp_flags);
  add_flag(cmp, cmp_flags, "--window", "window", "Simulation window in flip times");

  auto* ver = app.add_subcommand("verify", "Run the built-in verification battery");
  std::string fault;
  ver->add_option("--inject-fault", fault, "Negative control: 'normalization'")->group("");

  auto* swp = app.add_subcommand("sweep", "Flip-time scan over a grid of spin and photon numbers (CSV)");
  add_common(swp, sweep_flags);
  add_flag(swp, sweep_flags, "--spins-list", "spins_list", "Spin counts, e.g. 1,2,5 or 1:10");
  add_flag(swp, sweep_flags, "--photons-list", "photons_list", "Photon counts, e.g. 12,20,100");
  add_flag(swp, sweep_flags, "--photons-per-spin", "photons_per_spin", "Use n = ratio * N instead of a photon list");
  add_flag(swp, sweep_flags, "--window", "window", "Simulation window in flip times");

  auto* rerun = app.add_subcommand("rerun", "Reproduce an output from its manifest");
  std::string manifest_path, rerun_out;
  rerun->add_option("--manifest", manifest_path, "Manifest written next to a previous output")->required();
  rerun->add_option("--out", rerun_out, "Override the recorded output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*ver) {
      if (!fault.empty() && fault != "normalization") throw ConfigError("unknown fault '" + fault + "'");
      VerifyOptions options;
      options.corrupt_normalization = fault == "normalization";
      const auto results = run_verification(options);
      print_verification_table(results, out);
      return all_passed(results) ? kSuccess : kVerificationFailed;
    }
    if (*rerun) {
      std::ifstream file(manifest_path);
      if (!file) throw ConfigError("cannot open manifest '" + manifest_path + "'");
      json manifest;
      try {
        manifest = json::parse(file);
      } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed manifest: ") + e.what());
      }
      const std::string command = manifest.at("command").get<std::string>();
      const ParameterSet params(manifest.at("parameters").get<std::map<std::string, std::string>>());
      std::string target = rerun_out;
      if (target.empty() && !manifest.at("outputs").empty()) target = manifest.at("outputs")[0].get<std::string>();
      return execute(command, params, target, out);
    }
    const std::pair<CLI::App*, FlagValues*> commands[] = {
        {sim, &sim_flags}, {spec, &spec_flags}, {cmp, &cmp_flags}, {swp, &sweep_flags}};
    for (const auto& [sub, flags] : commands) {
      if (*sub) return execute(sub->get_name(), flags->resolve(), flags->out_path, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace dicke::cli
