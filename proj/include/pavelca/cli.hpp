#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pavelca/lifecycle.hpp"
#include "pavelca/report.hpp"

namespace pavelca::cli {

enum class Command { Pms, Footprint, Compare, Sweep, Reconcile };

struct RunConfig {
    Command command = Command::Footprint;
    std::string factors_path;
    std::vector<std::string> scenario_paths;  // footprint / compare
    std::string pms_params_path;              // pms / reconcile
    std::string published_path;               // pms (optional) / reconcile
    std::string sweep_spec_path;              // sweep
    std::string out_path;                     // empty = stdout only
    TableFormat format = TableFormat::Plain;
    Scope scope = Scope::FullLifecycle;
    int digits = 2;
    double threshold_pct = 5.0;
    bool provenance = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1; // invariant violations, all listed
inline constexpr int kExitIo = 2;         // missing files, parse failures

// Executes one command. Reports go to `out`, diagnostics to `err`; when
// config.out_path is set the report is also written there atomically.
// Identical inputs produce byte-identical outputs.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front end; parses flags into a RunConfig and delegates to run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pavelca::cli
