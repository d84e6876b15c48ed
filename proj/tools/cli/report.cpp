#include "cli/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace fuzzyces::cli {

using nlohmann::json;

namespace {

std::string csv_cell(const json& v) {
  if (v.is_null()) return "nan";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return v.dump();
}

}  // namespace

std::string render_json(const CommandResult& result, const std::string& timestamp) {
  const json doc{{"header",
                  {{"tool", "fuzzyces"}, {"version", FUZZYCES_VERSION}, {"command", result.command}, {"timestamp", timestamp}}},
                 {"body", result.body}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_cell(table.columns[i]);
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace fuzzyces::cli
