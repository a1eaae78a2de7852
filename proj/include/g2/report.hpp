#pragma once

#include <string>
#include <utility>
#include <vector>

namespace g2 {

enum class ReportStatus { Pass, Fail, Degenerate };

// Deterministic machine-readable command result: byte-identical output
// for identical inputs in both formats.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  ReportStatus status = ReportStatus::Pass;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> counterexample_columns;
  std::vector<std::vector<std::string>> counterexamples;

  bool operator==(const Report& o) const;
};

enum class ReportFormat { Tsv, Json };

std::string status_name(ReportStatus s);
std::string emit(const Report& report, ReportFormat format);
Report parse_report_json(const std::string& text);

}  // namespace g2
