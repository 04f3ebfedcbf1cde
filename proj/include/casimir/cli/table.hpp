#pragma once

// Long-format result tables with CSV and JSON writers.

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace casimir::cli {

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Column {
  std::string name;
  std::string unit;  // SI unit, "1" for dimensionless, "" for labels
};

struct Table {
  std::string verb;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;

  /// Appends a row; throws std::logic_error if its width differs from the header.
  void add_row(std::vector<Cell> row);
};

/// RFC 4180 CSV: header row, '.' decimal separator, %.14e for reals,
/// empty field for missing values.
void write_csv(const Table& t, std::ostream& out);

/// {"verb", "meta", "columns": [{"name", "unit"}], "rows": [{name: value}]}; missing values are null.
void write_json(const Table& t, std::ostream& out);

std::string format_real(double v);

}  // namespace casimir::cli
