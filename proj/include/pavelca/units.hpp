#pragma once

#include <optional>
#include <string_view>

namespace pavelca {

// Dimension tag of an emission-factor value. Every factor application in the
// engine must compose to plain kg CO2eq; anything else is rejected when the
// input is loaded.
enum class UnitDim {
    PerSqm,        // kg CO2eq / m^2
    PerSqmCm,      // kg CO2eq / (m^2 * cm)
    PerKm,         // kg CO2eq / km
    PerTkm,        // kg CO2eq / (t * km)
    PerGb,         // kg CO2eq / GB
    PerKwh,        // kg CO2eq / kWh
    PerItem,       // kg CO2eq / item
    PerYear,       // kg CO2eq / year
    Dimensionless, // kg CO2eq
};

std::string_view to_string(UnitDim dim);
std::optional<UnitDim> parse_unit_dim(std::string_view text);

// True for dimensions that scale with section area (roadworks factors).
bool is_area_intensity(UnitDim dim);

// True when the factor additionally scales with a layer thickness in cm.
bool needs_thickness(UnitDim dim);

} // namespace pavelca
