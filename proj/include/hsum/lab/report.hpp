#pragma once

#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hsum::lab {

using Field = std::variant<std::string, double, long long>;

/// "%.15g"; nan and inf spelled out.
std::string format_number(double v);
std::string csv_escape(const std::string& s);

/// RFC-4180 CSV writer with a mandatory header.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, std::vector<std::string> header);

  void row(const std::vector<Field>& fields);
  std::size_t rows() const { return rows_; }

 private:
  std::ofstream out_;
  std::size_t columns_;
  std::size_t rows_ = 0;
};

/// Collects constants and invariant outcomes for one suite.
class SuiteSummary {
 public:
  SuiteSummary(std::string suite, std::string config_hash, unsigned long long seed);

  void constant(const std::string& name, double value);
  /// Records an invariant; `detail` lists failing rows when it fails.
  void invariant(const std::string& name, bool pass, const std::string& detail = "");

  bool passed() const { return passed_; }
  const std::string& suite() const { return suite_; }
  const std::vector<std::string>& lines() const { return lines_; }
  std::vector<std::string> failures() const;

  nlohmann::ordered_json to_json() const;

 private:
  std::string suite_;
  std::string hash_;
  unsigned long long seed_;
  nlohmann::ordered_json constants_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json invariants_ = nlohmann::ordered_json::array();
  std::vector<std::string> lines_;
  bool passed_ = true;
};

/// Writes summary.json with every suite and a UTC timestamp.
void write_summary(const std::string& path, const std::vector<SuiteSummary>& suites, const nlohmann::ordered_json& config);

}  // namespace hsum::lab
