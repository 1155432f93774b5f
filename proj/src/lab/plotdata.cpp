#include "hsum/lab/plotdata.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hsum/lab/report.hpp"

namespace hsum::lab {

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

// Calls fn(row) with columns looked up by header name.
template <class Fn>
void for_each_row(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  std::map<std::string, std::size_t> col;
  const auto header = split_row(line);
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = split_row(line);
    fn([&](const std::string& name) -> const std::string& { return fields.at(col.at(name)); });
  }
}

}  // namespace

void emit_plot_data(const std::string& results_dir, std::ostream& out) {
  const std::filesystem::path dir(results_dir);
  if (!std::filesystem::is_directory(dir)) throw std::invalid_argument("no results directory at " + results_dir);
  out << "series,label,x,y,z\r\n";
  for_each_row(dir / "weaktype.csv", [&](auto get) {
    const std::string label = get("entry") + "/" + get("operator") + "/" + get("weight");
    out << "weaktype," << csv_escape(label) << ',' << get("lambda") << ',' << get("measure") << ','
        << get("constant") << "\r\n";
  });
  for_each_row(dir / "marcinkiewicz.csv", [&](auto get) {
    if (get("quantity") != "profile") return;
    out << "marcinkiewicz_profile," << csv_escape(get("entry")) << ',' << get("param") << ',' << get("value")
        << ",\r\n";
  });
}

}  // namespace hsum::lab
