#include "fracgrowth/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace fracgrowth {

namespace {

using nlohmann::json;

std::string read_whole_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::domain_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad())
    throw std::domain_error("cannot read " + path);
  return ss.str();
}

double number_field(const json& obj, const std::string& path,
                    const std::string& key) {
  if (!obj.contains(key))
    throw std::domain_error("config: missing field " + path + key);
  const json& v = obj.at(key);
  if (!v.is_number())
    throw std::domain_error("config: field " + path + key +
                            " must be a number");
  return v.get<double>();
}

GrowthFactor factor_field(const json& root, const std::string& key) {
  if (!root.contains(key))
    throw std::domain_error("config: missing section " + key);
  const json& sec = root.at(key);
  if (!sec.is_object())
    throw std::domain_error("config: section " + key + " must be an object");
  const std::string prefix = key + ".";
  const double x0 = number_field(sec, prefix, "x0");
  const double b = number_field(sec, prefix, "b");
  const double alpha = number_field(sec, prefix, "alpha");
  if (!std::isfinite(x0) || x0 <= 0.0)
    throw std::domain_error("config: " + key + ".x0 must be positive");
  if (!std::isfinite(b) || b <= 0.0)
    throw std::domain_error("config: " + key + ".b must be positive");
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0)
    throw std::domain_error("config: " + key + ".alpha must lie in (0, 1]");
  return GrowthFactor(x0, b, FracOrder(alpha));
}

double parse_cell(const std::string& cell, const std::string& path,
                  std::size_t line_no) {
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || !std::isfinite(out))
    throw std::domain_error(path + ":" + std::to_string(line_no) +
                            ": malformed number '" + cell + "'");
  return out;
}

std::vector<std::string> split_csv_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cells;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

EconomySpec parse_economy_config(const std::string& text,
                                 const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::domain_error(origin + ": " + e.what());
  }
  if (!root.is_object())
    throw std::domain_error("config: top level must be an object");

  GrowthFactor labor = factor_field(root, "labor");
  GrowthFactor capital = factor_field(root, "capital");
  GrowthFactor output = factor_field(root, "output");
  const double theta = number_field(root, "", "theta");
  if (!std::isfinite(theta) || theta <= 0.0 || theta >= 1.0)
    throw std::domain_error("config: theta must lie in (0, 1)");
  return EconomySpec(labor, capital, output, theta);
}

EconomySpec load_economy_config(const std::string& path) {
  return parse_economy_config(read_whole_file(path), path);
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size())
    throw std::domain_error("csv: one header per column required");
  if (columns.empty())
    throw std::domain_error("csv: need at least one column");
  const std::size_t rows = columns.front().size();
  for (const auto& col : columns)
    if (col.size() != rows)
      throw std::domain_error("csv: columns must have equal length");

  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out += ',';
    out += header[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      out += format_double(columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out)
    throw IoError("cannot write " + path);
}

Trajectory read_series_csv(const std::string& path,
                           const std::string& column) {
  std::istringstream in(read_whole_file(path));
  std::string line;
  if (!std::getline(in, line))
    throw std::domain_error(path + ":1: empty file");
  const std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 2)
    throw std::domain_error(path + ":1: need a time column and a value column");

  std::size_t col = 1;
  if (!column.empty()) {
    bool found = false;
    for (std::size_t c = 0; c < header.size(); ++c)
      if (header[c] == column) {
        col = c;
        found = true;
        break;
      }
    if (!found)
      throw std::domain_error(path + ":1: column '" + column + "' not found");
    if (col == 0)
      throw std::domain_error(path + ":1: column '" + column +
                              "' is the time axis");
  }

  std::vector<double> times, values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw std::domain_error(path + ":" + std::to_string(line_no) +
                              ": expected " + std::to_string(header.size()) +
                              " cells, got " + std::to_string(cells.size()));
    times.push_back(parse_cell(cells[0], path, line_no));
    values.push_back(parse_cell(cells[col], path, line_no));
  }
  if (times.size() < 2)
    throw std::domain_error(path + ": too few data rows");
  return Trajectory(TimeGrid::from_points(std::move(times)),
                    std::move(values));
}

}  // namespace fracgrowth
