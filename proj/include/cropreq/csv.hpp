#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cropreq::csv {

/// Canonical number formatting used by every export: 6 significant digits,
/// '.' decimal point, no locale. Reruns must be byte-identical, so all
/// file output goes through this one function.
std::string format(double v);

std::string join(const std::vector<std::string>& fields);

/// Comma split, fields trimmed of surrounding whitespace. No quoting:
/// the documented schemas have no embedded commas.
std::vector<std::string> split(std::string_view line);

std::string trim(std::string_view s);

struct Row {
  std::size_t line_no;  // 1-based, header is line 1
  std::vector<std::string> fields;
};

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;

  std::optional<std::size_t> column(const std::string& name) const;
};

/// Loads a whole delimiter-separated file. Header row required; blank
/// lines skipped. Throws std::runtime_error when the file cannot be read.
Table read_file(const std::string& path);
Table read_string(const std::string& text);

bool parse_int(const std::string& field, int& out);
bool parse_double(const std::string& field, double& out);

/// FNV-1a 64-bit content digest, used by the run manifest.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace cropreq::csv
