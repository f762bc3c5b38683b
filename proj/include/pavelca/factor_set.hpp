#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pavelca/model.hpp"

namespace pavelca {

class FactorLoadError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnknownFactorError : public std::runtime_error {
  public:
    explicit UnknownFactorError(const std::string& id)
        : std::runtime_error("unknown emission factor id '" + id + "'"), id_(id) {}
    const std::string& id() const { return id_; }

  private:
    std::string id_;
};

/// Registry of named emission factors. Immutable after load; concurrent
/// readers are fine.
struct FactorSet {
    std::map<std::string, EmissionFactor> factors;
    std::string dataset_name;
    std::string provenance;

    bool contains(const std::string& id) const { return factors.count(id) != 0; }
    const EmissionFactor* find(const std::string& id) const;
    const EmissionFactor& at(const std::string& id) const; // throws UnknownFactorError
    void insert(EmissionFactor factor);                    // throws FactorLoadError on duplicate id
    std::size_t size() const { return factors.size(); }
};

// Comma-separated text, header `id,value,unit,source`, one factor per row.
// Unit strings are exactly the UnitDim tags. Errors carry the row number.
FactorSet load_factor_set(std::istream& in, std::string dataset_name = "");
FactorSet load_factor_set_file(const std::string& path);
void save_factor_set(const FactorSet& set, std::ostream& out);

// Scenario validation that additionally needs the factor registry:
// unresolvable factor ids and dimension mismatches become violations.
std::vector<std::string> validate(const Scenario& scenario, const FactorSet& factors);

struct DeviceLine {
    std::string name;
    double power_active_w = 0.0;
    double hours_active = 0.0;
    double power_idle_w = 0.0;
    double hours_idle = 0.0;
};

/// Computing-station profile: device power lines plus the station-level
/// embodied GWP, depreciation and usage coefficient of the station factor.
struct StationProfile {
    std::string name;
    double usage_coefficient = 0.0; // days on the software per (operation*year*km)
    double embodied_gwp_kg = 0.0;
    double depreciation_days = 0.0;
    std::vector<DeviceLine> devices;
};

std::vector<std::string> validate(const StationProfile& profile);
StationProfile load_station_profile(std::istream& in, std::string name = "");
StationProfile load_station_profile_file(const std::string& path);

// Emission factor of an instrumented vehicle per km, from a freight factor
// per tonne-km and the average load in tonnes.
double derive_vehicle_km_factor(double freight_kg_per_tkm, double avg_load_t);

// Data-transfer factor per GB, from a transmission energy intensity in
// kWh/GB and the grid factor in kg CO2eq/kWh.
double derive_transfer_factor(double energy_intensity_kwh_per_gb, double grid_kg_per_kwh);

// Daily-weighted electrical power of a station in watts:
//   sum over device lines of (P_active*h_active + P_idle*h_idle) / 24.
double weighted_power_w(const StationProfile& profile);

// Station amortization factor in kg CO2eq per (operation*year*km):
//   usage_coefficient * (embodied/depreciation + 24 h * weighted power in kW * grid factor).
double station_factor(const StationProfile& profile, double grid_kg_per_kwh);

} // namespace pavelca
