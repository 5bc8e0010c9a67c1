#include "dicke/cli/csv_io.hpp"

#include "dicke/cli/config.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace dicke::cli {

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer.data(), ptr);
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out << f;
      continue;
    }
    out << '"';
    for (const char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << '\n';
}

void write_series_csv(const ObservableSeries& series, std::ostream& out) {
  std::vector<Observable> columns;
  for (const Observable obs : kAllObservables) {
    if (series.has(obs)) columns.push_back(obs);
  }
  std::vector<std::string> row{"t"};
  for (const Observable obs : columns) row.emplace_back(observable_name(obs));
  write_csv_row(out, row);
  for (std::size_t i = 0; i < series.size(); ++i) {
    row.assign(1, format_number(series.times[i]));
    for (const Observable obs : columns) row.push_back(format_number(series.column(obs)[i]));
    write_csv_row(out, row);
  }
}

ObservableSeries read_series_csv(std::istream& in) {
  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    return fields;
  };
  auto parse = [](const std::string& f) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc() || ptr != f.data() + f.size()) throw ConfigError("bad number '" + f + "' in CSV");
    return v;
  };

  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV");
  const auto header = split(line);
  if (header.empty() || header[0] != "t") throw ConfigError("CSV must start with a 't' column");
  std::vector<Observable> columns;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const auto obs = parse_observable(header[i]);
    if (!obs) throw ConfigError("unknown CSV column '" + header[i] + "'");
    columns.push_back(*obs);
  }

  ObservableSeries series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) throw ConfigError("ragged CSV row");
    series.times.push_back(parse(fields[0]));
    for (std::size_t i = 0; i < columns.size(); ++i) series.column(columns[i]).push_back(parse(fields[i + 1]));
  }
  return series;
}

}  // namespace dicke::cli
