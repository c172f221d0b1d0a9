#include "hydrorad/report/records.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "hydrorad/report/format.hpp"

#ifndef HYDRORAD_VERSION
#define HYDRORAD_VERSION "unknown"
#endif

namespace hydrorad::report {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string machine_text(const Field& f) {
  if (const auto* s = std::get_if<std::string>(&f)) return csv_escape(*s);
  if (const auto* i = std::get_if<long>(&f)) return std::to_string(*i);
  return format_sig10(std::get<double>(f));
}

std::string human_text(const Field& f) {
  if (const auto* s = std::get_if<std::string>(&f)) return *s;
  if (const auto* i = std::get_if<long>(&f)) return std::to_string(*i);
  return format_table_value(std::get<double>(f));
}

}  // namespace

std::string library_version() { return HYDRORAD_VERSION; }

void write_csv(std::ostream& out, const RecordTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << csv_escape(table.columns[c]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << machine_text(row[c]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const RecordTable& table, const Metadata& meta) {
  nlohmann::ordered_json doc;
  doc["metadata"]["constants"] = meta.constants_profile;
  doc["metadata"]["version"] = library_version();
  if (!meta.command.empty()) doc["metadata"]["command"] = meta.command;
  auto& records = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      const auto& f = row[c];
      if (const auto* s = std::get_if<std::string>(&f)) {
        rec[table.columns[c]] = *s;
      } else if (const auto* i = std::get_if<long>(&f)) {
        rec[table.columns[c]] = *i;
      } else {
        const double v = std::get<double>(f);
        if (std::isfinite(v)) {
          rec[table.columns[c]] = round_sig10(v);
        } else {
          rec[table.columns[c]] = nullptr;
        }
      }
    }
    records.push_back(std::move(rec));
  }
  out << doc.dump(2) << '\n';
}

void write_text(std::ostream& out, const RecordTable& table) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (const auto& f : row) line.push_back(human_text(f));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(table.columns.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) {
      if (c) text += "  ";
      text += line[c];
      if (c + 1 < line.size()) text.append(width[c] - line[c].size(), ' ');
    }
    out << text << '\n';
  }
}

}  // namespace hydrorad::report
