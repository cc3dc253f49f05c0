// Tabular output: header-prefixed TSV or one JSON object per line.

#ifndef IWAHORI_REPORT_HPP_
#define IWAHORI_REPORT_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace iwahori {

enum class Format { Tsv, Json };

Format parse_format(const std::string& name);

struct Table {
  std::vector<std::string> columns;
  std::vector<nlohmann::ordered_json> rows;  // keys in column order

  void add_row(nlohmann::ordered_json row);
};

// Scalars print as-is, arrays space-separated ("" when empty), nested
// arrays with ';' between the inner lists.
std::string tsv_cell(const nlohmann::ordered_json& value);

void write_tsv(std::ostream& out, const Table& table);
void write_json_lines(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, Format format);

}  // namespace iwahori

#endif  // IWAHORI_REPORT_HPP_
