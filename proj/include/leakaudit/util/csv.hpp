#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leakaudit/error.hpp"
#include "leakaudit/util/fs.hpp"

namespace leakaudit::util {

using CsvRow = std::vector<std::string>;

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_line(const CsvRow& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(row[i]);
  }
  out += '\n';
  return out;
}

inline CsvRow parse_csv_line(std::string_view line, std::size_t line_no) {
  CsvRow row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) {
    throw Error(ErrorKind::parse, with_line("unterminated quote in CSV", line_no));
  }
  row.push_back(std::move(field));
  return row;
}

/// Parsed CSV with a header row. Lines starting with '#' are comments.
struct CsvTable {
  CsvRow header;
  std::vector<CsvRow> rows;
  std::vector<std::string> comments;

  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw Error(ErrorKind::parse, "missing CSV column: " + std::string(name));
  }
};

inline CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool have_header = false;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      table.comments.emplace_back(line);
      continue;
    }
    auto row = parse_csv_line(line, line_no);
    if (!have_header) {
      table.header = std::move(row);
      have_header = true;
      continue;
    }
    if (row.size() != table.header.size()) {
      throw Error(ErrorKind::parse,
                  with_line("CSV row has " + std::to_string(row.size()) +
                                " fields, header has " +
                                std::to_string(table.header.size()),
                            line_no));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline CsvTable read_csv(const std::filesystem::path& path) {
  return parse_csv(read_file(path));
}

}  // namespace leakaudit::util
