#include "pavelca/factor_set.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace pavelca {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

double parse_number(const std::string& text, int row) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw FactorLoadError("row " + std::to_string(row) + ": cannot parse value '" + text +
                              "'");
    }
}

} // namespace

const EmissionFactor* FactorSet::find(const std::string& id) const {
    auto it = factors.find(id);
    return it == factors.end() ? nullptr : &it->second;
}

const EmissionFactor& FactorSet::at(const std::string& id) const {
    auto it = factors.find(id);
    if (it == factors.end())
        throw UnknownFactorError(id);
    return it->second;
}

void FactorSet::insert(EmissionFactor factor) {
    if (factors.count(factor.id))
        throw FactorLoadError("duplicate factor id '" + factor.id + "'");
    factors.emplace(factor.id, std::move(factor));
}

FactorSet load_factor_set(std::istream& in, std::string dataset_name) {
    FactorSet set;
    set.dataset_name = std::move(dataset_name);

    std::string line;
    int row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        if (!header_seen) {
            // First data line must be the documented header.
            if (stripped != "id,value,unit,source")
                throw FactorLoadError("row " + std::to_string(row) +
                                      ": expected header 'id,value,unit,source'");
            header_seen = true;
            continue;
        }
        auto fields = split_csv(stripped);
        if (fields.size() != 4)
            throw FactorLoadError("row " + std::to_string(row) + ": expected 4 fields, got " +
                                  std::to_string(fields.size()));
        EmissionFactor factor;
        factor.id = fields[0];
        if (factor.id.empty())
            throw FactorLoadError("row " + std::to_string(row) + ": empty factor id");
        factor.value = parse_number(fields[1], row);
        if (factor.value < 0.0)
            throw FactorLoadError("row " + std::to_string(row) + ": negative value for '" +
                                  factor.id + "'");
        auto dim = parse_unit_dim(fields[2]);
        if (!dim)
            throw FactorLoadError("row " + std::to_string(row) + ": unknown unit dimension '" +
                                  fields[2] + "'");
        factor.unit = *dim;
        factor.source = fields[3];
        if (set.contains(factor.id))
            throw FactorLoadError("row " + std::to_string(row) + ": duplicate factor id '" +
                                  factor.id + "'");
        set.insert(std::move(factor));
    }
    return set;
}

FactorSet load_factor_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FactorLoadError("cannot open factor file '" + path + "'");
    auto set = load_factor_set(in, path);
    return set;
}

void save_factor_set(const FactorSet& set, std::ostream& out) {
    out << "id,value,unit,source\n";
    out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& [id, factor] : set.factors)
        out << id << ',' << factor.value << ',' << to_string(factor.unit) << ',' << factor.source
            << '\n';
}

std::vector<std::string> validate(const Scenario& scenario, const FactorSet& factors) {
    std::vector<std::string> violations = validate(scenario);

    auto check_factor = [&](const std::string& id, const std::string& ctx) {
        const EmissionFactor* factor = factors.find(id);
        if (!factor) {
            violations.push_back(ctx + ": unresolvable factor id '" + id + "'");
            return;
        }
        if (!is_area_intensity(factor->unit))
            violations.push_back(ctx + ": factor '" + id + "' has dimension " +
                                 std::string(to_string(factor->unit)) +
                                 ", expected per-sqm or per-sqm-cm");
    };

    for (const auto& [cls, ops] : scenario.schedules) {
        const std::string where = "schedule " + std::string(to_string(cls));
        for (std::size_t i = 0; i < ops.size(); ++i)
            if (!ops[i].factor_id.empty())
                check_factor(ops[i].factor_id, where + " op " + std::to_string(i + 1));
    }
    if (!scenario.failures.points.empty() && !scenario.failures.factor_id.empty())
        check_factor(scenario.failures.factor_id, "failure schedule");

    return violations;
}

std::vector<std::string> validate(const StationProfile& profile) {
    std::vector<std::string> violations;
    if (profile.usage_coefficient < 0.0)
        violations.push_back("usage coefficient must be >= 0");
    if (profile.embodied_gwp_kg < 0.0)
        violations.push_back("embodied GWP must be >= 0");
    if (profile.depreciation_days < 0.0)
        violations.push_back("depreciation must be >= 0");
    for (const auto& line : profile.devices) {
        if (line.power_active_w < 0.0 || line.power_idle_w < 0.0 || line.hours_active < 0.0 ||
            line.hours_idle < 0.0)
            violations.push_back("device '" + line.name + "': negative power or hours");
        if (line.hours_active + line.hours_idle > 24.0)
            violations.push_back("device '" + line.name + "': active + idle hours exceed 24");
    }
    return violations;
}

StationProfile load_station_profile(std::istream& in, std::string name) {
    StationProfile profile;
    profile.name = std::move(name);

    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw FactorLoadError("station profile row " + std::to_string(row) +
                                  ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "name") {
            profile.name = value;
        } else if (key == "usage_coefficient") {
            profile.usage_coefficient = parse_number(value, row);
        } else if (key == "embodied_gwp") {
            profile.embodied_gwp_kg = parse_number(value, row);
        } else if (key == "depreciation_days") {
            profile.depreciation_days = parse_number(value, row);
        } else if (key == "device") {
            // device = <name> power_active=.. hours_active=.. power_idle=.. hours_idle=..
            std::istringstream fields(value);
            DeviceLine device;
            if (!(fields >> device.name))
                throw FactorLoadError("station profile row " + std::to_string(row) +
                                      ": device line missing name");
            std::string item;
            while (fields >> item) {
                const auto ieq = item.find('=');
                if (ieq == std::string::npos)
                    throw FactorLoadError("station profile row " + std::to_string(row) +
                                          ": expected field=value, got '" + item + "'");
                const std::string fkey = item.substr(0, ieq);
                const double fval = parse_number(item.substr(ieq + 1), row);
                if (fkey == "power_active")
                    device.power_active_w = fval;
                else if (fkey == "hours_active")
                    device.hours_active = fval;
                else if (fkey == "power_idle")
                    device.power_idle_w = fval;
                else if (fkey == "hours_idle")
                    device.hours_idle = fval;
                else
                    throw FactorLoadError("station profile row " + std::to_string(row) +
                                          ": unknown device field '" + fkey + "'");
            }
            profile.devices.push_back(std::move(device));
        } else {
            throw FactorLoadError("station profile row " + std::to_string(row) +
                                  ": unknown key '" + key + "'");
        }
    }

    auto violations = validate(profile);
    if (!violations.empty())
        throw FactorLoadError("invalid station profile '" + profile.name +
                              "': " + violations.front());
    return profile;
}

StationProfile load_station_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FactorLoadError("cannot open station profile '" + path + "'");
    return load_station_profile(in, path);
}

double derive_vehicle_km_factor(double freight_kg_per_tkm, double avg_load_t) {
    if (freight_kg_per_tkm < 0.0 || avg_load_t < 0.0)
        throw std::invalid_argument("vehicle-km derivation requires nonnegative inputs");
    return freight_kg_per_tkm * avg_load_t;
}

double derive_transfer_factor(double energy_intensity_kwh_per_gb, double grid_kg_per_kwh) {
    if (energy_intensity_kwh_per_gb < 0.0 || grid_kg_per_kwh < 0.0)
        throw std::invalid_argument("transfer derivation requires nonnegative inputs");
    return energy_intensity_kwh_per_gb * grid_kg_per_kwh;
}

double weighted_power_w(const StationProfile& profile) {
    double watt_hours = 0.0;
    for (const auto& line : profile.devices) {
        if (line.hours_active + line.hours_idle > 24.0)
            throw std::invalid_argument("device '" + line.name +
                                        "': active + idle hours exceed 24");
        watt_hours += line.power_active_w * line.hours_active + line.power_idle_w * line.hours_idle;
    }
    return watt_hours / 24.0;
}

double station_factor(const StationProfile& profile, double grid_kg_per_kwh) {
    if (grid_kg_per_kwh < 0.0)
        throw std::invalid_argument("grid factor must be >= 0");
    if (profile.depreciation_days <= 0.0)
        throw std::invalid_argument("station '" + profile.name +
                                    "': depreciation period must be > 0");
    const double amortization = profile.embodied_gwp_kg / profile.depreciation_days;
    // Power is held in watts; the daily energy term needs kW * h * (kg/kWh).
    const double daily_use = 24.0 * (weighted_power_w(profile) / 1000.0) * grid_kg_per_kwh;
    return profile.usage_coefficient * (amortization + daily_use);
}

} // namespace pavelca
