#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace sally::cli {

namespace {

std::string join(const std::vector<Integer>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      cell);
}

std::string cell_csv(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Integer>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return csv_field(v);
        } else {
          return "\"" + join(v, ";") + "\"";
        }
      },
      cell);
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "-";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Integer>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return "[" + join(v, ",") + "]";
        }
      },
      cell);
}

}  // namespace

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json Document::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) doc["params"][key] = cell_json(value);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = cell_json(row[c]);
    doc["rows"].push_back(std::move(obj));
  }
  return doc;
}

std::string Document::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) out += (c ? "," : "") + csv_field(columns[c]);
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + cell_csv(row[c]);
    out += "\n";
  }
  return out;
}

std::string aligned(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) text += "  ";
      text += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    out << text << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '='));
  line(rule);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string Document::to_table() const {
  std::ostringstream out;
  out << command;
  for (const auto& [key, value] : params) out << "  " << key << "=" << cell_text(value);
  out << "\n\n";
  std::vector<std::vector<std::string>> text_rows;
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (const auto& cell : row) cells.push_back(cell_text(cell));
    text_rows.push_back(std::move(cells));
  }
  out << aligned(columns, text_rows);
  for (const auto& block : table_blocks) out << "\n" << block;
  return out.str();
}

std::string Document::render(Format format) const {
  switch (format) {
    case Format::Table: return to_table();
    case Format::Csv: return to_csv();
    case Format::Json: return to_json().dump(2) + "\n";
  }
  return {};
}

}  // namespace sally::cli
