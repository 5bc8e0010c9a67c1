#include "dicke/cli/config.hpp"

#include "dicke/analysis.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace dicke::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& raw) {
  const std::string text = trim(raw);
  T value{};
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("parameter '" + key + "': cannot parse '" + raw + "' as a number");
  }
  return value;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

std::optional<std::string> ParameterSet::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> ParameterSet::integer(const std::string& key) const {
  const auto raw = text(key);
  if (!raw) return std::nullopt;
  return parse_number<std::int64_t>(key, *raw);
}

std::optional<double> ParameterSet::real(const std::string& key) const {
  const auto raw = text(key);
  if (!raw) return std::nullopt;
  const std::string t = trim(*raw);
  if (t == "inf" || t == "infinity") return std::numeric_limits<double>::infinity();
  return parse_number<double>(key, *raw);
}

std::vector<std::int64_t> ParameterSet::integer_list(const std::string& key) const {
  std::vector<std::int64_t> out;
  const auto raw = text(key);
  if (!raw) return out;
  for (const std::string& item : split_list(*raw)) {
    // "a:b" expands to the inclusive range a..b
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(parse_number<std::int64_t>(key, item));
      continue;
    }
    const auto lo = parse_number<std::int64_t>(key, item.substr(0, colon));
    const auto hi = parse_number<std::int64_t>(key, item.substr(colon + 1));
    if (hi < lo) throw ConfigError("parameter '" + key + "': empty range '" + item + "'");
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::int64_t ParameterSet::require_integer(const std::string& key) const {
  const auto v = integer(key);
  if (!v) throw ConfigError("missing required parameter '" + key + "'");
  return *v;
}

void ParameterSet::merge(const ParameterSet& overrides) {
  for (const auto& [k, v] : overrides.values_) values_[k] = v;
}

ParameterSet parse_config(std::istream& in) {
  ParameterSet params;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    if (params.has(key)) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    params.set(key, value);
  }
  return params;
}

ParameterSet load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

ModelParams model_params(const ParameterSet& params) {
  ModelParams mp;
  if (auto g = params.real("coupling")) mp.coupling = *g;
  if (auto w = params.real("omega")) mp.omega = *w;
  if (auto t = params.real("t_off")) mp.t_off = *t;
  try {
    mp.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return mp;
}

Model model(const ParameterSet& params) {
  const auto text = params.text("model");
  if (!text) return Model::exact;
  const auto m = parse_model(*text);
  if (!m) throw ConfigError("unknown model '" + *text + "' (expected exact or large-n)");
  return *m;
}

SimulationConfig simulation_config(const ParameterSet& params) {
  SimulationConfig config;
  config.spins = params.require_integer("spins");
  config.photons = params.require_integer("photons");
  config.params = model_params(params);
  config.model = model(params);
  if (auto steps = params.integer("steps")) {
    if (*steps < 2 || *steps > 100'000'000) throw ConfigError("steps must lie in [2, 1e8]");
    config.steps = static_cast<int>(*steps);
  } else {
    config.steps = 2000;
  }
  if (config.spins < 1 || config.photons < 1) throw ConfigError("spins and photons must be >= 1");
  if (auto t = params.real("t_max")) {
    config.t_max = *t;
  } else {
    config.t_max = 2.0 * universal_flip_time(config.spins, config.params.coupling, config.photons);
  }
  if (auto list = params.text("observables")) {
    config.record.clear();
    for (const std::string& name : split_list(*list)) {
      if (name == "all") {
        config.record.insert(std::begin(kAllObservables), std::end(kAllObservables));
        continue;
      }
      const auto obs = parse_observable(name);
      if (!obs) throw ConfigError("unknown observable '" + name + "'");
      config.record.insert(*obs);
    }
  }
  try {
    config.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return config;
}

}  // namespace dicke::cli
