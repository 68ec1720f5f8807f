#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "cwwkit/detail/text.hpp"
#include "cwwkit/error.hpp"
#include "cwwkit/vocabulary.hpp"

namespace cwwkit {

/// One unresolved batch row: the student id and the words as written.
struct FeedbackRow {
  std::string student_id;
  std::vector<std::string> words;  // in the table's column order
};

/// A feedback batch as read from disk. Columns after `student_id` are parameter keys.
struct FeedbackTable {
  std::vector<std::string> columns;  // parameter keys, file order
  std::vector<FeedbackRow> rows;

  /// Canonical-name -> word map for resolve_feedback.
  std::map<std::string, std::string> raw_map(const ParameterSchema& schema,
                                             const FeedbackRow& row) const {
    std::map<std::string, std::string> raw;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (const auto& p : schema.parameters) {
        if (p.key() == columns[c]) raw.emplace(p.name(), row.words.at(c));
      }
    }
    return raw;
  }
};

inline constexpr const char* kStudentIdColumn = "student_id";

/// Reads `student_id,<key>,<key>,...`. Each schema parameter key must appear
/// exactly once in the header. Blank lines are skipped. Words are not resolved
/// here, so one bad word does not reject the whole file.
inline FeedbackTable read_feedback(std::istream& in, const ParameterSchema& schema) {
  std::string line;
  std::size_t row_number = 0;
  FeedbackTable table;
  while (detail::read_line(in, line)) {
    ++row_number;
    if (!detail::trim(line).empty()) break;
  }
  if (detail::trim(line).empty()) throw ParseError(row_number, "missing header row");
  const auto header = detail::split_cells(line);
  if (header.front() != kStudentIdColumn) {
    throw ParseError(row_number, "first column must be 'student_id'");
  }
  table.columns.assign(header.begin() + 1, header.end());
  for (const auto& p : schema.parameters) {
    const auto n = std::count(table.columns.begin(), table.columns.end(), p.key());
    if (n != 1) {
      throw ParseError(row_number, "header must name column '" + p.key() + "' exactly once");
    }
  }
  if (table.columns.size() != schema.parameters.size()) {
    throw ParseError(row_number, "header has unexpected columns");
  }
  while (detail::read_line(in, line)) {
    ++row_number;
    if (detail::trim(line).empty()) continue;
    auto cells = detail::split_cells(line);
    if (cells.size() != header.size()) {
      throw ParseError(row_number, "expected " + std::to_string(header.size()) + " cells, got " +
                                       std::to_string(cells.size()));
    }
    if (cells.front().empty()) throw ParseError(row_number, "empty student_id");
    FeedbackRow row{cells.front(), {cells.begin() + 1, cells.end()}};
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// Writes the table back in its own column order, LF line endings.
inline void write_feedback(std::ostream& out, const FeedbackTable& table) {
  out << kStudentIdColumn;
  for (const auto& c : table.columns) out << ',' << c;
  out << '\n';
  for (const auto& row : table.rows) {
    out << row.student_id;
    for (const auto& w : row.words) out << ',' << w;
    out << '\n';
  }
}

}  // namespace cwwkit
