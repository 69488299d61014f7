#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fracgrowth/caputo.hpp"
#include "fracgrowth/invariant_surface.hpp"

namespace fracgrowth {

// Filesystem failure, kept distinct from domain errors so the CLI can map it
// to its own exit code.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Economy config, JSON:
//   {"labor":{"x0":..,"b":..,"alpha":..}, "capital":{...}, "output":{...},
//    "theta":..}
// Parse and validation failures throw std::domain_error naming the offending
// field; an unreadable file does too (a missing input is a usage error).
EconomySpec load_economy_config(const std::string& path);
EconomySpec parse_economy_config(const std::string& text,
                                 const std::string& origin = "config");

// CSV with a header row; all columns must have equal length.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns);

// Writes content to path; throws IoError when the file cannot be created or
// fully written.
void write_text_file(const std::string& path, const std::string& content);

// Reads a time series from CSV: first column is time, `column` selects the
// value column by header name (empty = second column). Malformed cells are
// reported as "<path>:<line>: ...". Times must be strictly increasing.
Trajectory read_series_csv(const std::string& path, const std::string& column);

}  // namespace fracgrowth
