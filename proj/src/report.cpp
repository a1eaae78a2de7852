#include "g2/report.hpp"

#include <json.hpp>

namespace g2 {

bool Report::operator==(const Report& o) const {
  return command == o.command && parameters == o.parameters &&
         status == o.status && columns == o.columns && rows == o.rows &&
         counterexample_columns == o.counterexample_columns &&
         counterexamples == o.counterexamples;
}

std::string status_name(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass: return "PASS";
    case ReportStatus::Fail: return "FAIL";
    default: return "DEGENERATE";
  }
}

namespace {

ReportStatus status_from_name(const std::string& s) {
  if (s == "PASS") return ReportStatus::Pass;
  if (s == "FAIL") return ReportStatus::Fail;
  if (s == "DEGENERATE") return ReportStatus::Degenerate;
  throw std::invalid_argument("unknown report status: " + s);
}

std::string emit_tsv(const Report& r) {
  std::string out;
  out += "# command: " + r.command + "\n";
  for (const auto& kv : r.parameters)
    out += "# " + kv.first + ": " + kv.second + "\n";
  out += "# status: " + status_name(r.status) + "\n";
  auto table = [&out](const std::vector<std::string>& cols,
                      const std::vector<std::vector<std::string>>& rows) {
    for (size_t i = 0; i < cols.size(); ++i)
      out += (i ? "\t" : "") + cols[i];
    if (!cols.empty()) out += "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) out += (i ? "\t" : "") + row[i];
      out += "\n";
    }
  };
  table(r.columns, r.rows);
  if (!r.counterexamples.empty() || !r.counterexample_columns.empty()) {
    out += "# counterexamples:\n";
    table(r.counterexample_columns, r.counterexamples);
  }
  return out;
}

std::string emit_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& kv : r.parameters) params[kv.first] = kv.second;
  j["parameters"] = params;
  j["status"] = status_name(r.status);
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  j["counterexample_columns"] = r.counterexample_columns;
  j["counterexamples"] = r.counterexamples;
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit(const Report& r, ReportFormat format) {
  return format == ReportFormat::Tsv ? emit_tsv(r) : emit_json(r);
}

Report parse_report_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& item : j.at("parameters").items())
    r.parameters.emplace_back(item.key(), item.value().get<std::string>());
  r.status = status_from_name(j.at("status").get<std::string>());
  r.columns = j.at("columns").get<std::vector<std::string>>();
  r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  r.counterexample_columns =
      j.at("counterexample_columns").get<std::vector<std::string>>();
  r.counterexamples =
      j.at("counterexamples").get<std::vector<std::vector<std::string>>>();
  return r;
}

}  // namespace g2
