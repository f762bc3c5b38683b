#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pavelca/factor_set.hpp"
#include "pavelca/model.hpp"

namespace pavelca {

enum class Scope { FullLifecycle, ServiceLife };

std::string_view to_string(Scope scope);
std::optional<Scope> parse_scope(std::string_view text);

/// Lifecycle footprint of one scenario partitioned by stage, in kg CO2eq.
/// `total` is the exact sum of the four stages.
struct StageBreakdown {
    std::string scenario_name;
    double area_m2 = 0.0;
    double construction = 0.0;
    double maintenance = 0.0;
    double reconstruction = 0.0;
    double pms = 0.0;
    double total = 0.0;

    double per_sqm(double stage_kg) const { return area_m2 > 0.0 ? stage_kg / area_m2 : 0.0; }
    double construction_per_sqm() const { return per_sqm(construction); }
    double maintenance_per_sqm() const { return per_sqm(maintenance); }
    double reconstruction_per_sqm() const { return per_sqm(reconstruction); }
    double pms_per_sqm() const { return per_sqm(pms); }
    double total_per_sqm() const { return per_sqm(total); }

    static StageBreakdown from_stages(std::string name, double area_m2, double construction,
                                      double maintenance, double reconstruction, double pms);
};

// kg CO2eq of a single operation: width * length * fraction * EF, times
// thickness for per-sqm-cm factors. Throws UnknownFactorError for an
// unresolvable id and FactorLoadError for a non-area factor dimension.
double operation_gwp(const RoadworksOp& op, const SectionGeometry& geometry,
                     const FactorSet& factors);

// Full-timeline evaluation: per-class schedules weighted by subgrade shares,
// plus failure-schedule reconstructions and the PMS footprint when the
// scenario carries one. Pure; deterministic for identical inputs.
StageBreakdown scenario_footprint(const Scenario& scenario, const FactorSet& factors);

// Scope::ServiceLife zeroes the construction stage and recomputes the total;
// Scope::FullLifecycle is the identity.
StageBreakdown scope_filter(const StageBreakdown& breakdown, Scope scope);

struct SavingsRow {
    std::string name;
    double total_kg = 0.0;
    double saving_t = 0.0;    // tonnes emitted less than baseline (negative = more)
    double saving_pct = 0.0;  // positive = emits less than baseline
    int rank = 0;             // 1 = lowest total
};

struct SavingsTable {
    std::size_t baseline = 0;
    std::vector<SavingsRow> rows;
};

// Savings of each breakdown against the baseline entry. All breakdowns must
// share the same geometry (area); throws std::invalid_argument otherwise.
SavingsTable compare(const std::vector<StageBreakdown>& breakdowns, std::size_t baseline);

} // namespace pavelca
