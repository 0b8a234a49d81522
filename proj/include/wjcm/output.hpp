#pragma once

#include <filesystem>
#include <string>

#include "wjcm/sweep.hpp"

namespace wjcm {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view token); // "csv" | "json"

// Column headers in canonical order for the requested quantities; density
// Wehrl angles are spelled as fractions of pi, e.g. "Z_theta@0.25pi".
std::vector<std::string> csv_columns(const SweepResult& result);

// RFC-4180-style CSV: header row, '.' decimal separator, LF line endings,
// 17 significant digits (value-exact round trip). Unavailable values print
// as "nan". Contains no timing metadata, so repeated runs are byte-identical.
std::string to_csv(const SweepResult& result);

// UTF-8 JSON with a "meta" block (tool, version, constants mode, wall time,
// config snapshot) and a "records" array; failed quantities are null and the
// record carries an "errors" array.
std::string to_json(const SweepResult& result);

// Serializes and writes; I/O failures are reported with the path attached.
void write_output(const SweepResult& result, OutputFormat format,
                  const std::filesystem::path& path);

// Shortest-exact decimal for a double, 17 significant digits, locale-free.
std::string format_double(double value);

} // namespace wjcm
