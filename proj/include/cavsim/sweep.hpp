#ifndef CAVSIM_SWEEP_HPP
#define CAVSIM_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cavsim/types.hpp"

namespace cavsim {

// Rectangular table of sweep results destined for CSV, with a '#'-prefixed
// provenance header carrying the effective configuration (never wall-clock
// data, so identical configurations produce byte-identical files).
struct SweepResult {
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_provenance(const std::string& key, const std::string& value);
  void add_provenance(const std::string& key, double value);

  // All values finite, every row has one value per column, first column
  // non-decreasing.  Throws invariant_error.
  void self_check() const;

  void write_csv(std::ostream& out) const;

  // self_check + write; throws invariant_error if the file cannot be opened.
  void save(const std::string& path) const;
};

// Deterministic formatting used for all CSV numbers.
std::string format_double(double v);

}  // namespace cavsim

#endif  // CAVSIM_SWEEP_HPP
