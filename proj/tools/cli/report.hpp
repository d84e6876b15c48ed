#pragma once

#include <string>

#include "cli/commands.hpp"

namespace fuzzyces::cli {

enum class Format { json, csv };

/// {"header": {tool, version, command, timestamp}, "body": ...}. Everything
/// that varies between identical runs lives in the header.
std::string render_json(const CommandResult& result, const std::string& timestamp);

/// Header line of column names, then one line per row.
std::string render_csv(const Table& table);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace fuzzyces::cli
