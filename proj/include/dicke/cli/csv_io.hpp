#pragma once

#include "dicke/dynamics.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace dicke::cli {

/// Shortest decimal string that reads back to the same double (at most 17
/// significant digits, '.' separator regardless of locale).
std::string format_number(double value);

/// Header `t,<recorded observables in canonical order>`, one row per sample, '\n' endings.
void write_series_csv(const ObservableSeries& series, std::ostream& out);

/// Inverse of write_series_csv. Unknown columns are rejected.
ObservableSeries read_series_csv(std::istream& in);

/// Generic table writer used for sweep output.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace dicke::cli
