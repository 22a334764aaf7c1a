#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "sally/semigroup.hpp"

namespace sally::cli {

/// A report cell. monostate renders as null / empty.
using Cell = std::variant<std::monostate, bool, Integer, std::string, std::vector<Integer>>;

enum class Format { Table, Csv, Json };

/// Rows of one command's output plus its parameters. The three renderings
/// carry the same data; the table form may add free-text blocks.
struct Document {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> table_blocks;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
  std::string to_table() const;
  std::string render(Format format) const;
};

/// Fixed-width rendering of a header plus string rows.
std::string aligned(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// RFC-4180 field quoting: wraps in quotes when the field holds a comma,
/// quote or line break, doubling inner quotes.
std::string csv_field(const std::string& text);

}  // namespace sally::cli
