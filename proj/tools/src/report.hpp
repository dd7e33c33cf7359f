#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace tiltcara::cli {

using Json = nlohmann::ordered_json;

/// One table cell. Non-finite doubles serialize as the strings "NaN",
/// "Infinity" and "-Infinity".
using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct Column {
  std::string name;
  /// What the column holds, as a formula or a short description.
  std::string ref;

  bool operator==(const Column&) const = default;
};

/// Machine-readable outcome of one command.
struct ReportRecord {
  std::string command;
  Json parameters = Json::object();
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  bool pass = true;
  /// Names of the failing checks, in row order.
  std::vector<std::string> failures;
  /// Present only when timing was requested, so default output is reproducible.
  std::optional<double> wall_time_s;

  bool operator==(const ReportRecord&) const = default;
};

Json to_json(const ReportRecord& record);
/// Throws nlohmann::json::exception on malformed input.
ReportRecord record_from_json(const Json& j);

/// %.17g, with nan / inf / -inf for non-finite values.
std::string format_number(double v);
std::string format_cell(const Cell& c);

/// `#`-prefixed header (command, parameters, one line per column), a
/// column-name line, then one line per row. LF line endings.
std::string to_csv(const ReportRecord& record);
/// Pretty-printed JSON with a trailing newline.
std::string to_json_text(const ReportRecord& record);

}  // namespace tiltcara::cli
