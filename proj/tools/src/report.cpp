#include "report.hpp"

#include <cmath>

#include <fmt/format.h>

namespace tiltcara::cli {

namespace {

Json cell_to_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) return "NaN";
    if (std::isinf(*d)) return *d > 0 ? "Infinity" : "-Infinity";
    return *d;
  }
  return std::visit([](const auto& v) { return Json(v); }, c);
}

Cell cell_from_json(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "NaN") return std::nan("");
  if (s == "Infinity") return HUGE_VAL;
  if (s == "-Infinity") return -HUGE_VAL;
  return s;
}

}  // namespace

Json to_json(const ReportRecord& r) {
  Json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  Json cols = Json::array();
  for (const auto& c : r.columns) cols.push_back({{"name", c.name}, {"paper_ref", c.ref}});
  j["columns"] = std::move(cols);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr = Json::array();
    for (const auto& c : row) jr.push_back(cell_to_json(c));
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["pass"] = r.pass;
  j["failures"] = r.failures;
  if (r.wall_time_s) j["wall_time_s"] = *r.wall_time_s;
  return j;
}

ReportRecord record_from_json(const Json& j) {
  ReportRecord r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  for (const auto& c : j.at("columns"))
    r.columns.push_back({c.at("name").get<std::string>(), c.at("paper_ref").get<std::string>()});
  for (const auto& jr : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& c : jr) row.push_back(cell_from_json(c));
    r.rows.push_back(std::move(row));
  }
  r.pass = j.at("pass").get<bool>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  if (j.contains("wall_time_s")) r.wall_time_s = j.at("wall_time_s").get<double>();
  return r;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

std::string to_csv(const ReportRecord& r) {
  std::string out = fmt::format("# command: {}\n", r.command);
  for (const auto& [key, value] : r.parameters.items()) out += fmt::format("# {}: {}\n", key, value.dump());
  for (const auto& c : r.columns) out += fmt::format("# column {}: {}\n", c.name, c.ref);
  out += fmt::format("# pass: {}\n", r.pass ? "true" : "false");
  for (const auto& f : r.failures) out += fmt::format("# failed: {}\n", f);
  if (r.wall_time_s) out += fmt::format("# wall_time_s: {}\n", format_number(*r.wall_time_s));
  for (std::size_t i = 0; i < r.columns.size(); ++i) out += (i ? "," : "") + r.columns[i].name;
  out += '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_cell(row[i]);
    out += '\n';
  }
  return out;
}

std::string to_json_text(const ReportRecord& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace tiltcara::cli
