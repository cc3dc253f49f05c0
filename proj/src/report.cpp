#include "iwahori/report.hpp"

#include "iwahori/errors.hpp"

namespace iwahori {

Format parse_format(const std::string& name) {
  if (name == "tsv")
    return Format::Tsv;
  if (name == "json")
    return Format::Json;
  throw InputError("unknown format '" + name + "' (expected json or tsv)");
}

void Table::add_row(nlohmann::ordered_json row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("row width does not match the table header");
  std::size_t k = 0;
  for (auto it = row.begin(); it != row.end(); ++it, ++k)
    if (it.key() != columns[k])
      throw std::invalid_argument("row key '" + it.key() + "' out of column order");
  rows.push_back(std::move(row));
}

std::string tsv_cell(const nlohmann::ordered_json& value) {
  if (value.is_string())
    return value.get<std::string>();
  if (!value.is_array())
    return value.dump();
  std::string s;
  for (std::size_t k = 0; k < value.size(); ++k) {
    if (k)
      s += value[k].is_array() ? ";" : " ";
    s += tsv_cell(value[k]);
  }
  return s;
}

void write_tsv(std::ostream& out, const Table& table) {
  for (std::size_t k = 0; k < table.columns.size(); ++k)
    out << (k ? "\t" : "") << table.columns[k];
  out << '\n';
  for (const auto& row : table.rows) {
    std::size_t k = 0;
    for (auto it = row.begin(); it != row.end(); ++it, ++k)
      out << (k ? "\t" : "") << tsv_cell(*it);
    out << '\n';
  }
}

void write_json_lines(std::ostream& out, const Table& table) {
  for (const auto& row : table.rows)
    out << row.dump() << '\n';
}

void write_table(std::ostream& out, const Table& table, Format format) {
  if (format == Format::Tsv)
    write_tsv(out, table);
  else
    write_json_lines(out, table);
}

}  // namespace iwahori
