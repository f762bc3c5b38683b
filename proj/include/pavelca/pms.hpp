#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pavelca {

/// Parameter block of the pavement-management-system footprint model.
/// One field per symbol of the collection / storage / planning equations.
struct PmsParams {
    double n_round = 0.0;           // monitoring rounds per year
    double p_m_years = 0.0;         // maintenance period covered, years
    double section_length_km = 0.0; // monitored section length, km
    double f_m = 0.0;               // monitoring vehicle factor, kg CO2eq/km
    double l_t_km = 0.0;            // total length informed in the database, km
    double k_database = 0.0;        // share of the database used for the PMS, [0,1]
    double i_hard = 0.0;            // database hardware embodied GWP, kg CO2eq
    double delta_hard_years = 0.0;  // hardware depreciation period, years
    double i_yrun = 0.0;            // one-year database run, kg CO2eq/year
    double n_operation = 0.0;       // planning operations per year
    double k_t = 0.0;               // data volume, GB per (operation*year*km)
    double f_transfer = 0.0;        // data transfer factor, kg CO2eq/GB
    double f_adv = 0.0;             // advanced station factor, kg CO2eq per (operation*year*km)
    double f_s = 0.0;               // standard station factor, kg CO2eq per (operation*year*km)
};

std::vector<std::string> validate(const PmsParams& p);

/// Footprint of the PMS split by use case. `total` is always the exact sum
/// of the three components, and each sub-split sums to its component.
struct PmsBreakdown {
    double collection = 0.0;
    double storage_hardware = 0.0;
    double storage_running = 0.0;
    double storage = 0.0;
    double planning_local = 0.0;
    double planning_transfer = 0.0;
    double planning = 0.0;
    double total = 0.0;

    static PmsBreakdown from_components(double collection, double storage_hardware,
                                        double storage_running, double planning_local,
                                        double planning_transfer);
};

// kg CO2eq to collect condition data: n_round * P_m * L_section * F_m.
double data_collection_gwp(const PmsParams& p);

// (hardware, running) kg CO2eq of the database share allocated to the section:
//   allocation = P_m * L_section / L_t * k_database
//   hardware   = allocation * I_hard / delta_hard
//   running    = allocation * I_yrun
// Throws std::invalid_argument when l_t or delta_hard is zero.
std::pair<double, double> storage_gwp(const PmsParams& p);

// (local, transfer) kg CO2eq of the planning activity:
//   base     = n_operation * P_m * L_section
//   local    = base * (F_adv + F_s)
//   transfer = base * k_t * F_transfer
std::pair<double, double> planning_gwp(const PmsParams& p);

PmsBreakdown pms_total(const PmsParams& p);

struct ReconciliationRow {
    std::string component;
    double computed = 0.0;
    double published = 0.0;
    double abs_delta = 0.0; // computed - published
    double ratio = 0.0;     // computed / published
    bool flagged = false;   // |ratio - 1| beyond threshold
};

struct ReconciliationReport {
    double threshold = 0.05; // relative deviation that triggers a flag
    std::vector<ReconciliationRow> rows;

    const ReconciliationRow* find(const std::string& component) const;
};

/// Compares an equation-computed breakdown against externally published
/// component values, per component and for the total.
ReconciliationReport reconcile_with_published(const PmsBreakdown& computed,
                                              const PmsBreakdown& published,
                                              double threshold = 0.05);

} // namespace pavelca
