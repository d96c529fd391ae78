#include "rdlab/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rdlab {

void Dataset::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("Dataset: row width does not match column count");
  }
  rows.push_back(std::move(row));
}

std::string format_num(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("format_num: non-finite value");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_num(std::get<double>(c));
  return std::get<std::string>(c);
}

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  out += '"';
}

}  // namespace

std::string to_csv(const Dataset& d) {
  std::string out;
  for (const std::string& c : d.comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (const auto& [name, value] : d.params) {
    out += "# ";
    out += name;
    out += " = ";
    out += value;
    out += '\n';
  }
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += d.columns[i];
  }
  out += '\n';
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Dataset& d) {
  std::string out = "{\n  \"figure_id\": ";
  append_json_string(out, d.figure_id);
  out += ",\n  \"params\": {";
  for (std::size_t i = 0; i < d.params.size(); ++i) {
    if (i > 0) out += ',';
    out += "\n    ";
    append_json_string(out, d.params[i].first);
    out += ": ";
    append_json_string(out, d.params[i].second);
  }
  out += d.params.empty() ? "},\n" : "\n  },\n";
  out += "  \"columns\": [";
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    if (i > 0) out += ", ";
    append_json_string(out, d.columns[i]);
  }
  out += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    if (r > 0) out += ',';
    out += "\n    [";
    for (std::size_t i = 0; i < d.rows[r].size(); ++i) {
      if (i > 0) out += ", ";
      const Cell& c = d.rows[r][i];
      if (std::holds_alternative<double>(c)) {
        out += format_num(std::get<double>(c));
      } else {
        append_json_string(out, std::get<std::string>(c));
      }
    }
    out += ']';
  }
  out += d.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("write_atomic: cannot open " + tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write_atomic: short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rdlab
