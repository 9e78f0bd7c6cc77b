#include "genjac/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace genjac::io {

OutputTable::OutputTable(std::vector<Column> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::logic_error("OutputTable: needs columns");
}

void OutputTable::set_meta(const std::string& key, const std::string& value) {
  for (auto& kv : meta_) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  meta_.emplace_back(key, value);
}

void OutputTable::set_meta(const std::string& key, double value) {
  set_meta(key, format_g17(value));
}

void OutputTable::add_row(const std::vector<double>& row) {
  if (row.size() != columns_.size())
    throw std::logic_error("OutputTable: row arity mismatch");
  for (double v : row) {
    if (!std::isfinite(v)) {
      ++dropped_;
      return;
    }
  }
  rows_.push_back(row);
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string OutputTable::to_csv() const {
  std::ostringstream out;
  for (const auto& kv : meta_) out << "# " << kv.first << "=" << kv.second << "\n";
  out << "# dropped_rows=" << dropped_ << "\n";
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ",";
    out << columns_[i].name;
    if (!columns_[i].unit.empty()) out << "[" << columns_[i].unit << "]";
  }
  out << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_g17(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string OutputTable::to_json() const {
  nlohmann::ordered_json j;
  j["meta"] = nlohmann::ordered_json::object();
  for (const auto& kv : meta_) j["meta"][kv.first] = kv.second;
  j["meta"]["dropped_rows"] = std::to_string(dropped_);
  j["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : columns_)
    j["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
  j["rows"] = rows_;
  return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t c = line.find(',', pos);
    if (c == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, c - pos));
    pos = c + 1;
  }
}

}  // namespace

OutputTable read_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> meta;
  std::size_t dropped = 0;
  bool have_header = false;
  std::vector<Column> cols;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::size_t start = line.find_first_not_of(" \t", 1);
      if (start == std::string::npos) continue;
      std::string body = line.substr(start);
      std::size_t eq = body.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("read_csv: meta line without '='");
      std::string key = body.substr(0, eq), value = body.substr(eq + 1);
      if (key == "dropped_rows")
        dropped = std::strtoull(value.c_str(), nullptr, 10);
      else
        meta.emplace_back(key, value);
      continue;
    }
    if (!have_header) {
      for (const std::string& cell : split_commas(line)) {
        Column c;
        std::size_t br = cell.find('[');
        if (br != std::string::npos && cell.back() == ']') {
          c.name = cell.substr(0, br);
          c.unit = cell.substr(br + 1, cell.size() - br - 2);
        } else {
          c.name = cell;
        }
        cols.push_back(c);
      }
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (const std::string& cell : split_commas(line)) {
      char* end = nullptr;
      double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str())
        throw std::invalid_argument("read_csv: bad numeric cell '" + cell + "'");
      row.push_back(v);
    }
    if (row.size() != cols.size())
      throw std::invalid_argument("read_csv: row arity mismatch");
    rows.push_back(std::move(row));
  }
  if (!have_header) throw std::invalid_argument("read_csv: missing header");
  OutputTable t(cols);
  for (const auto& kv : meta) t.set_meta(kv.first, kv.second);
  for (const auto& r : rows) t.add_row(r);
  t.set_dropped(dropped);
  return t;
}

}  // namespace genjac::io
