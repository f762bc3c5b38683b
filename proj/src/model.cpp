#include "pavelca/model.hpp"

#include <cmath>
#include <sstream>

namespace pavelca {

namespace {

struct KindTag {
    OpKind kind;
    std::string_view tag;
};

constexpr KindTag kKindTags[] = {
    {OpKind::ConstructionLayer, "construction-layer"},
    {OpKind::Overlay, "overlay"},
    {OpKind::Mill, "mill"},
    {OpKind::MillAndFill, "mill-and-fill"},
    {OpKind::SurfaceTreatment, "surface-treatment"},
    {OpKind::CrackFilling, "crack-filling"},
    {OpKind::Reconstruction, "reconstruction"},
};

struct ClassTag {
    SubgradeClass cls;
    std::string_view tag;
};

constexpr ClassTag kClassTags[] = {
    {SubgradeClass::Pf2, "pf2"},
    {SubgradeClass::Pf2qs, "pf2qs"},
    {SubgradeClass::Pf3, "pf3"},
};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::string_view to_string(OpKind kind) {
    for (const auto& t : kKindTags)
        if (t.kind == kind)
            return t.tag;
    return "construction-layer";
}

std::optional<OpKind> parse_op_kind(std::string_view text) {
    for (const auto& t : kKindTags)
        if (t.tag == text)
            return t.kind;
    return std::nullopt;
}

std::string_view to_string(SubgradeClass cls) {
    for (const auto& t : kClassTags)
        if (t.cls == cls)
            return t.tag;
    return "pf2qs";
}

std::optional<SubgradeClass> parse_subgrade_class(std::string_view text) {
    for (const auto& t : kClassTags)
        if (t.tag == text)
            return t.cls;
    return std::nullopt;
}

double share_of(const SubgradeProfile& profile, SubgradeClass cls) {
    switch (cls) {
    case SubgradeClass::Pf2: return profile.pf2;
    case SubgradeClass::Pf2qs: return profile.pf2qs;
    case SubgradeClass::Pf3: return profile.pf3;
    }
    return 0.0;
}

std::vector<std::string> validate(const SubgradeProfile& profile) {
    std::vector<std::string> violations;
    const struct { const char* name; double v; } shares[] = {
        {"pf2", profile.pf2}, {"pf2qs", profile.pf2qs}, {"pf3", profile.pf3}};
    for (const auto& s : shares) {
        if (!(s.v >= 0.0 && s.v <= 1.0))
            violations.push_back(std::string("subgrade share ") + s.name + " = " + fmt(s.v) +
                                 " outside [0,1]");
    }
    if (std::abs(profile.sum() - 1.0) > SubgradeProfile::kSumTolerance)
        violations.push_back("subgrade shares sum != 1 (sum = " + fmt(profile.sum()) + ")");
    return violations;
}

std::vector<std::string> validate(const Scenario& scenario) {
    std::vector<std::string> violations;

    if (!(scenario.geometry.length_m > 0.0))
        violations.push_back("geometry length must be > 0");
    if (!(scenario.geometry.width_m > 0.0))
        violations.push_back("geometry width must be > 0");
    if (!(scenario.geometry.lifespan_years > 0))
        violations.push_back("geometry lifespan must be > 0");
    if (scenario.geometry.heavy_vehicles_per_day < 0.0)
        violations.push_back("heavy vehicles per day must be >= 0");

    for (auto v : validate(scenario.subgrade))
        violations.push_back(std::move(v));

    for (const auto& [cls, ops] : scenario.schedules) {
        const std::string where = "schedule " + std::string(to_string(cls));
        for (std::size_t i = 0; i < ops.size(); ++i) {
            const RoadworksOp& op = ops[i];
            const std::string ctx = where + " op " + std::to_string(i + 1);
            if (op.year < 0 || op.year > scenario.geometry.lifespan_years)
                violations.push_back(ctx + ": year " + std::to_string(op.year) +
                                     " outside [0, lifespan]");
            if (!(op.fraction >= 0.0 && op.fraction <= 1.0))
                violations.push_back(ctx + ": fraction " + fmt(op.fraction) + " outside [0,1]");
            if (op.thickness_cm < 0.0)
                violations.push_back(ctx + ": thickness must be >= 0");
            if (op.factor_id.empty())
                violations.push_back(ctx + ": missing factor id");
        }
    }

    double prev = 0.0;
    for (std::size_t i = 0; i < scenario.failures.points.size(); ++i) {
        const FailurePoint& pt = scenario.failures.points[i];
        const std::string ctx = "failure point " + std::to_string(i + 1);
        if (pt.year < 0 || pt.year > scenario.geometry.lifespan_years)
            violations.push_back(ctx + ": year outside [0, lifespan]");
        if (!(pt.cumulative_fraction >= 0.0 && pt.cumulative_fraction <= 1.0))
            violations.push_back(ctx + ": cumulative fraction outside [0,1]");
        if (pt.cumulative_fraction < prev)
            violations.push_back(ctx + ": cumulative fraction decreases");
        prev = pt.cumulative_fraction;
    }
    if (!scenario.failures.points.empty() && scenario.failures.factor_id.empty())
        violations.push_back("failure schedule missing factor id");

    if (scenario.pms) {
        for (auto v : validate(*scenario.pms))
            violations.push_back("pms: " + std::move(v));
    }

    return violations;
}

} // namespace pavelca
