#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace iwave {

/// Fixed 17-significant-digit formatting; round-trips every double and keeps
/// CSV output byte-identical across runs.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// One tabular command result: schema tag, column names, numeric rows and a
/// trailing summary of named scalars.
struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
};

/// CSV layout: `#schema=` line, header row, one line per row, then
/// `#summary.<key>=<value>` comment lines. LF line endings, 17 significant
/// digits; the column order is part of the public contract.
inline void write_csv(std::ostream& os, const Table& t) {
  os << "#schema=" << t.schema << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    os << t.columns[c] << (c + 1 < t.columns.size() ? "," : "");
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << format_double(row[c]) << (c + 1 < row.size() ? "," : "");
    os << "\n";
  }
  for (const auto& [key, value] : t.summary)
    os << "#summary." << key << "=" << format_double(value) << "\n";
}

/// JSON layout: one document {"meta": <resolved config>, "data": {...}}.
inline void write_json(std::ostream& os, const nlohmann::ordered_json& meta, const Table& t) {
  nlohmann::ordered_json doc;
  doc["meta"] = meta;
  doc["data"]["schema"] = t.schema;
  doc["data"]["columns"] = t.columns;
  doc["data"]["rows"] = t.rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [key, value] : t.summary) summary[key] = value;
  doc["data"]["summary"] = summary;
  os << doc.dump(2) << "\n";
}

}  // namespace iwave
