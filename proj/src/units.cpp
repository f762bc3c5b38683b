#include "pavelca/units.hpp"

namespace pavelca {

namespace {

struct DimTag {
    UnitDim dim;
    std::string_view tag;
};

constexpr DimTag kTags[] = {
    {UnitDim::PerSqm, "per-sqm"},
    {UnitDim::PerSqmCm, "per-sqm-cm"},
    {UnitDim::PerKm, "per-km"},
    {UnitDim::PerTkm, "per-tkm"},
    {UnitDim::PerGb, "per-GB"},
    {UnitDim::PerKwh, "per-kWh"},
    {UnitDim::PerItem, "per-item"},
    {UnitDim::PerYear, "per-year"},
    {UnitDim::Dimensionless, "dimensionless"},
};

} // namespace

std::string_view to_string(UnitDim dim) {
    for (const auto& t : kTags)
        if (t.dim == dim)
            return t.tag;
    return "dimensionless";
}

std::optional<UnitDim> parse_unit_dim(std::string_view text) {
    for (const auto& t : kTags)
        if (t.tag == text)
            return t.dim;
    return std::nullopt;
}

bool is_area_intensity(UnitDim dim) {
    return dim == UnitDim::PerSqm || dim == UnitDim::PerSqmCm;
}

bool needs_thickness(UnitDim dim) {
    return dim == UnitDim::PerSqmCm;
}

} // namespace pavelca
