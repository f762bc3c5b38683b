#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "pavelca/pms.hpp"
#include "pavelca/sensitivity.hpp"

namespace pavelca {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Scenario file: geometry / subgrade blocks, one operation table per
// subgrade class, a failure table, and an optional [pms] block referencing
// a parameter file (resolved relative to the scenario file).
Scenario load_scenario_file(const std::string& path, const FactorSet& factors);

// Key-value parameter file using the model's symbol names. Values are
// numbers, `@id` references into the factor set, or (for the station
// factors) references to station profile files.
PmsParams load_pms_params_file(const std::string& path, const FactorSet& factors);

/// Published reference values for the PMS breakdown: component values in kg
/// plus the shares as printed in the source table (the printed shares are
/// carried as-is and are not recomputed from the components).
struct PublishedPms {
    PmsBreakdown values;
    std::map<std::string, double> printed_share_pct;
    double printed_total = 0.0;
};

PublishedPms load_published_pms_file(const std::string& path);

// Sweep spec file: the three scenario template paths, the scope list and the
// labeled vector table. Referenced scenarios are loaded eagerly.
SweepSpec load_sweep_spec_file(const std::string& path, const FactorSet& factors);

// Writes via a temporary file and renames into place, so a failed run never
// leaves a partial output behind.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace pavelca
