#include "hsum/lab/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <stdexcept>

namespace hsum::lab {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvWriter::CsvWriter(const std::string& path, std::vector<std::string> header)
    : out_(path, std::ios::binary), columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot write " + path);
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << csv_escape(header[i]);
  out_ << "\r\n";
}

void CsvWriter::row(const std::vector<Field>& fields) {
  if (fields.size() != columns_) throw std::logic_error("CSV row width does not match the header");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    std::visit(
        [this](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::string>) {
            out_ << csv_escape(v);
          } else if constexpr (std::is_same_v<T, double>) {
            out_ << format_number(v);
          } else {
            out_ << v;
          }
        },
        fields[i]);
  }
  out_ << "\r\n";
  ++rows_;
}

SuiteSummary::SuiteSummary(std::string suite, std::string config_hash, unsigned long long seed)
    : suite_(std::move(suite)), hash_(std::move(config_hash)), seed_(seed) {}

void SuiteSummary::constant(const std::string& name, double value) {
  if (std::isfinite(value)) {
    constants_[name] = value;
  } else {
    constants_[name] = format_number(value);
  }
}

void SuiteSummary::invariant(const std::string& name, bool pass, const std::string& detail) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["pass"] = pass;
  if (!detail.empty()) j["detail"] = detail;
  invariants_.push_back(std::move(j));
  lines_.push_back(name + ": " + (pass ? "pass" : "FAIL") + (pass || detail.empty() ? "" : " (" + detail + ")"));
  passed_ = passed_ && pass;
}

std::vector<std::string> SuiteSummary::failures() const {
  std::vector<std::string> out;
  for (const auto& inv : invariants_) {
    if (!inv["pass"].get<bool>()) {
      out.push_back(inv["name"].get<std::string>() + (inv.contains("detail") ? ": " + inv["detail"].get<std::string>() : ""));
    }
  }
  return out;
}

nlohmann::ordered_json SuiteSummary::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["config_hash"] = hash_;
  j["seed"] = seed_;
  j["passed"] = passed_;
  j["constants"] = constants_;
  j["invariants"] = invariants_;
  return j;
}

void write_summary(const std::string& path, const std::vector<SuiteSummary>& suites,
                   const nlohmann::ordered_json& config) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);

  nlohmann::ordered_json j;
  j["timestamp"] = stamp;
  j["config"] = config;
  bool all = true;
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    j["suites"].push_back(s.to_json());
    all = all && s.passed();
  }
  j["passed"] = all;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace hsum::lab
