#pragma once

#include "dicke/dynamics.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicke::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolved `key = value` parameters, ordered by key so serialization is stable.
class ParameterSet {
 public:
  ParameterSet() = default;
  explicit ParameterSet(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::optional<std::string> text(const std::string& key) const;
  std::optional<std::int64_t> integer(const std::string& key) const;
  std::optional<double> real(const std::string& key) const;
  std::vector<std::int64_t> integer_list(const std::string& key) const;

  std::int64_t require_integer(const std::string& key) const;

  /// Entries of `overrides` replace entries here.
  void merge(const ParameterSet& overrides);

 private:
  std::map<std::string, std::string> values_;
};

/// Flat `key = value` text, one pair per line; `#` starts a comment.
/// Throws ConfigError naming the offending line.
ParameterSet parse_config(std::istream& in);
ParameterSet load_config(const std::string& path);

/// spins, photons, coupling, omega, model, t_max, steps, observables, t_off.
/// t_max defaults to two flip times, steps to 2000, observables to all.
SimulationConfig simulation_config(const ParameterSet& params);

ModelParams model_params(const ParameterSet& params);
Model model(const ParameterSet& params);

}  // namespace dicke::cli
