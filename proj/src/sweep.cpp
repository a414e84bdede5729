#include "cavsim/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace cavsim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void SweepResult::add_provenance(const std::string& key, const std::string& value) {
  provenance.emplace_back(key, value);
}

void SweepResult::add_provenance(const std::string& key, double value) {
  provenance.emplace_back(key, format_double(value));
}

void SweepResult::self_check() const {
  if (columns.empty()) throw invariant_error("SweepResult: no columns");
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw invariant_error("SweepResult: ragged row");
    for (double v : row)
      if (!std::isfinite(v)) throw invariant_error("SweepResult: non-finite value");
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i][0] < rows[i - 1][0])
      throw invariant_error("SweepResult: independent variable not monotone");
}

void SweepResult::write_csv(std::ostream& out) const {
  for (const auto& [key, value] : provenance)
    out << "# " << key << " = " << value << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c)
    out << columns[c] << (c + 1 == columns.size() ? "\n" : ",");
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << format_double(row[c]) << (c + 1 == row.size() ? "\n" : ",");
  }
}

void SweepResult::save(const std::string& path) const {
  self_check();
  std::ofstream out(path);
  if (!out) throw invariant_error("SweepResult: cannot open output file: " + path);
  write_csv(out);
  if (!out) throw invariant_error("SweepResult: write failed: " + path);
}

}  // namespace cavsim
