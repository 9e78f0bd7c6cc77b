#pragma once

// Column-oriented numeric tables with CSV/JSON emission.
//
// CSV layout: '#'-prefixed key=value meta lines, then a header of column
// names (unit appended in brackets when present), then data rows.  Values
// are printed with 17 significant digits so parsing an emitted file
// reproduces the in-memory table bit for bit.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace genjac::io {

struct Column {
  std::string name;
  std::string unit;  // empty for dimensionless
};

class OutputTable {
 public:
  explicit OutputTable(std::vector<Column> columns);

  // Inserts or replaces; emission preserves first-insertion order.
  void set_meta(const std::string& key, const std::string& value);
  void set_meta(const std::string& key, double value);

  // Rows must match the column count (logic_error otherwise).  Rows with a
  // NaN or infinity are dropped and counted instead of stored.
  void add_row(const std::vector<double>& row);

  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& meta() const {
    return meta_;
  }
  std::size_t dropped() const { return dropped_; }
  void set_dropped(std::size_t n) { dropped_ = n; }

  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::size_t dropped_ = 0;
};

// Parses text produced by to_csv back into a table (meta, columns, rows,
// dropped count).  Throws std::invalid_argument on malformed input.
OutputTable read_csv(const std::string& text);

// Shortest 17-significant-digit form used everywhere tables are printed.
std::string format_g17(double v);

}  // namespace genjac::io
