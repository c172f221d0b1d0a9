#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hydrorad::report {

using Field = std::variant<std::string, long, double>;

/// A rectangular dataset with named columns, rendered as CSV, JSON or an
/// aligned text table. Doubles are written with 10 significant digits in the
/// machine formats so that identical runs give identical bytes.
struct RecordTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Field>> rows;
};

struct Metadata {
  std::string constants_profile;
  std::string command;
};

/// Header row plus one line per record; comma separated, LF line endings.
void write_csv(std::ostream& out, const RecordTable& table);
/// {"metadata": {...}, "records": [{column: value, ...}, ...]}
void write_json(std::ostream& out, const RecordTable& table, const Metadata& meta);
/// Space-aligned columns; doubles in the compact table style.
void write_text(std::ostream& out, const RecordTable& table);

std::string library_version();

}  // namespace hydrorad::report
