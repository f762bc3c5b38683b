#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pavelca/pms.hpp"
#include "pavelca/units.hpp"

namespace pavelca {

struct SectionGeometry {
    double length_m = 0.0;
    double width_m = 0.0;
    int lifespan_years = 0;
    double heavy_vehicles_per_day = 0.0;

    double area_m2() const { return length_m * width_m; }

    // Functional unit of the bundled datasets: 10 km x 7 m kept in good
    // condition for 30 years under 500 heavy vehicles per day.
    static SectionGeometry reference_highway() { return {10000.0, 7.0, 30, 500.0}; }
};

struct EmissionFactor {
    std::string id;
    double value = 0.0; // kg CO2eq per unit
    UnitDim unit = UnitDim::Dimensionless;
    std::string source;
};

enum class OpKind {
    ConstructionLayer,
    Overlay,
    Mill,
    MillAndFill,
    SurfaceTreatment,
    CrackFilling,
    Reconstruction,
};

std::string_view to_string(OpKind kind);
std::optional<OpKind> parse_op_kind(std::string_view text);

/// One dated roadworks operation. Thickness is multiplied into per-sqm-cm
/// factors and ignored for per-sqm factors (fixed-thickness treatments).
struct RoadworksOp {
    int year = 0;             // integer years from commissioning, year 0 = build
    OpKind kind = OpKind::ConstructionLayer;
    std::string factor_id;
    double thickness_cm = 0.0; // 0 allowed for non-layer operations
    double fraction = 1.0;     // share of section area treated, [0,1]
};

/// Average share of section length per bearing-capacity class over the
/// pavement lifespan. Shares must form a simplex.
struct SubgradeProfile {
    double pf2 = 0.0;
    double pf2qs = 0.0;
    double pf3 = 0.0;

    static constexpr double kSumTolerance = 1e-9;
    double sum() const { return pf2 + pf2qs + pf3; }
};

enum class SubgradeClass { Pf2, Pf2qs, Pf3 };

std::string_view to_string(SubgradeClass cls);
std::optional<SubgradeClass> parse_subgrade_class(std::string_view text);
double share_of(const SubgradeProfile& profile, SubgradeClass cls);

struct FailurePoint {
    int year = 0;
    double cumulative_fraction = 0.0;
};

/// Cumulative share of the section requiring full-thickness reconstruction.
/// Increments between points become reconstruction operations using the
/// schedule's factor and thickness.
struct FailureSchedule {
    std::string factor_id;
    double thickness_cm = 0.0;
    std::vector<FailurePoint> points;

    bool empty() const { return points.empty(); }
};

/// A design-build-maintain alternative: geometry, per-class operation
/// schedules, a failure schedule, and (for digitally managed scenarios)
/// the PMS parameter block. Immutable after construction by convention;
/// instances may be shared read-only across threads.
struct Scenario {
    std::string name;
    SectionGeometry geometry;
    SubgradeProfile subgrade;
    std::map<SubgradeClass, std::vector<RoadworksOp>> schedules;
    FailureSchedule failures;
    std::optional<PmsParams> pms;
};

/// Checks every structural invariant and returns one message per violation.
/// Violations are data, not failures: an empty list means the scenario is valid.
std::vector<std::string> validate(const SubgradeProfile& profile);
std::vector<std::string> validate(const Scenario& scenario);

} // namespace pavelca
