#include "pavelca/lifecycle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pavelca/stable_sum.hpp"

namespace pavelca {

std::string_view to_string(Scope scope) {
    return scope == Scope::ServiceLife ? "service-life" : "full-lifecycle";
}

std::optional<Scope> parse_scope(std::string_view text) {
    if (text == "full-lifecycle" || text == "full")
        return Scope::FullLifecycle;
    if (text == "service-life" || text == "service")
        return Scope::ServiceLife;
    return std::nullopt;
}

StageBreakdown StageBreakdown::from_stages(std::string name, double area_m2, double construction,
                                           double maintenance, double reconstruction, double pms) {
    StageBreakdown b;
    b.scenario_name = std::move(name);
    b.area_m2 = area_m2;
    b.construction = construction;
    b.maintenance = maintenance;
    b.reconstruction = reconstruction;
    b.pms = pms;
    b.total = construction + maintenance + reconstruction + pms;
    return b;
}

double operation_gwp(const RoadworksOp& op, const SectionGeometry& geometry,
                     const FactorSet& factors) {
    const EmissionFactor& factor = factors.at(op.factor_id);
    if (!is_area_intensity(factor.unit))
        throw FactorLoadError("factor '" + factor.id + "' has dimension " +
                              std::string(to_string(factor.unit)) +
                              "; roadworks need per-sqm or per-sqm-cm");
    double gwp = geometry.width_m * geometry.length_m * op.fraction * factor.value;
    if (needs_thickness(factor.unit))
        gwp *= op.thickness_cm;
    return gwp;
}

namespace {

enum class Stage { Construction, Maintenance, Reconstruction };

Stage stage_of(const RoadworksOp& op) {
    if (op.kind == OpKind::Reconstruction)
        return Stage::Reconstruction;
    if (op.kind == OpKind::ConstructionLayer && op.year == 0)
        return Stage::Construction;
    // Structural layers laid after commissioning count as maintenance, like
    // every surface operation.
    return Stage::Maintenance;
}

} // namespace

StageBreakdown scenario_footprint(const Scenario& scenario, const FactorSet& factors) {
    StableSum construction;
    StableSum maintenance;
    StableSum reconstruction;

    // Per-class schedules, weighted by the class share of the section.
    for (const auto& [cls, ops] : scenario.schedules) {
        const double share = share_of(scenario.subgrade, cls);
        if (share == 0.0)
            continue;
        for (const RoadworksOp& op : ops) {
            const double gwp = share * operation_gwp(op, scenario.geometry, factors);
            switch (stage_of(op)) {
            case Stage::Construction: construction.add(gwp); break;
            case Stage::Maintenance: maintenance.add(gwp); break;
            case Stage::Reconstruction: reconstruction.add(gwp); break;
            }
        }
    }

    // Failure-driven rehabilitation: each increment of the cumulative failed
    // fraction becomes a full-thickness reconstruction of that fraction.
    if (!scenario.failures.empty()) {
        double previous = 0.0;
        for (const FailurePoint& pt : scenario.failures.points) {
            const double increment = pt.cumulative_fraction - previous;
            previous = pt.cumulative_fraction;
            if (increment == 0.0)
                continue;
            RoadworksOp op;
            op.year = pt.year;
            op.kind = OpKind::Reconstruction;
            op.factor_id = scenario.failures.factor_id;
            op.thickness_cm = scenario.failures.thickness_cm;
            op.fraction = increment;
            reconstruction.add(operation_gwp(op, scenario.geometry, factors));
        }
    }

    const double pms = scenario.pms ? pms_total(*scenario.pms).total : 0.0;

    return StageBreakdown::from_stages(scenario.name, scenario.geometry.area_m2(),
                                       construction.get(), maintenance.get(),
                                       reconstruction.get(), pms);
}

StageBreakdown scope_filter(const StageBreakdown& breakdown, Scope scope) {
    if (scope == Scope::FullLifecycle)
        return breakdown;
    return StageBreakdown::from_stages(breakdown.scenario_name, breakdown.area_m2, 0.0,
                                       breakdown.maintenance, breakdown.reconstruction,
                                       breakdown.pms);
}

SavingsTable compare(const std::vector<StageBreakdown>& breakdowns, std::size_t baseline) {
    if (breakdowns.size() < 2)
        throw std::invalid_argument("compare needs at least two breakdowns");
    if (baseline >= breakdowns.size())
        throw std::invalid_argument("baseline index out of range");
    const double area = breakdowns[baseline].area_m2;
    for (const auto& b : breakdowns)
        if (b.area_m2 != area)
            throw std::invalid_argument("geometry mismatch: breakdown '" + b.scenario_name +
                                        "' covers a different section area");

    SavingsTable table;
    table.baseline = baseline;
    const double base_total = breakdowns[baseline].total;

    for (const auto& b : breakdowns) {
        SavingsRow row;
        row.name = b.scenario_name;
        row.total_kg = b.total;
        row.saving_t = (base_total - b.total) / 1000.0;
        row.saving_pct = base_total != 0.0 ? 100.0 * (base_total - b.total) / base_total : 0.0;
        table.rows.push_back(std::move(row));
    }

    // Rank 1 = lowest total; ties keep input order.
    std::vector<std::size_t> order(table.rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return table.rows[a].total_kg < table.rows[b].total_kg;
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        table.rows[order[pos]].rank = static_cast<int>(pos + 1);

    return table;
}

} // namespace pavelca
