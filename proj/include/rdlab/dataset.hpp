#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rdlab {

/// One table cell: a number (formatted with format_num) or a literal string
/// (used for 0/1 codeword patterns in the code tables).
using Cell = std::variant<double, std::string>;

/// A flat, column-schema'd table plus metadata. The same Dataset serializes
/// to CSV and JSON with identical numeric text.
struct Dataset {
  std::string figure_id;  // empty for ad-hoc command output
  std::vector<std::pair<std::string, std::string>> params;  // ordered, preformatted
  std::vector<std::string> comments;  // CSV '#' lines emitted before the header
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Shortest decimal form within 12 significant digits, lowercase exponent.
std::string format_num(double v);

std::string to_csv(const Dataset& d);
std::string to_json(const Dataset& d);

/// Writes via a temporary file in the same directory and renames into place,
/// so failures never leave a partial file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace rdlab
