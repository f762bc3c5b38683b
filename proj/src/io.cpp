#include "pavelca/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pavelca/factor_set.hpp"

namespace fs = std::filesystem;

namespace pavelca {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

struct SectionLine {
    int number = 0;
    std::string text;
};

struct Section {
    std::string name; // "" = before the first [section]
    std::vector<SectionLine> lines;
};

// Sectioned text: `[section]` headings, `#` comments, key = value lines and
// whitespace-separated table rows.
std::vector<Section> read_sections(std::istream& in) {
    std::vector<Section> sections;
    sections.push_back({"", {}});
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(number) + ": unterminated section '" +
                                 line + "'");
            sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
            continue;
        }
        sections.back().lines.push_back({number, line});
    }
    return sections;
}

bool is_key_value(const std::string& line) { return line.find('=') != std::string::npos; }

std::pair<std::string, std::string> split_key_value(const SectionLine& line) {
    const auto eq = line.text.find('=');
    return {trim(line.text.substr(0, eq)), trim(line.text.substr(eq + 1))};
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

double parse_number(const std::string& text, const std::string& path, int line) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(line) + ": cannot parse number '" + text +
                         "'");
    }
}

int parse_int(const std::string& text, const std::string& path, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(line) + ": cannot parse integer '" + text +
                         "'");
    }
}

std::string resolve_relative(const std::string& base_file, const std::string& ref) {
    fs::path p(ref);
    if (p.is_absolute())
        return p.string();
    return (fs::path(base_file).parent_path() / p).string();
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    return in;
}

// Numeric value or `@id` reference into the factor set (with the dimension
// the key expects).
double value_or_factor_ref(const std::string& text, const FactorSet& factors, UnitDim expected,
                           const std::string& path, int line) {
    if (!text.empty() && text.front() == '@') {
        const std::string id = text.substr(1);
        const EmissionFactor* factor = factors.find(id);
        if (!factor)
            throw ParseError(path + ":" + std::to_string(line) + ": unresolvable factor id '" +
                             id + "'");
        if (factor->unit != expected)
            throw ParseError(path + ":" + std::to_string(line) + ": factor '" + id + "' is " +
                             std::string(to_string(factor->unit)) + ", expected " +
                             std::string(to_string(expected)));
        return factor->value;
    }
    return parse_number(text, path, line);
}

} // namespace

PmsParams load_pms_params_file(const std::string& path, const FactorSet& factors) {
    auto in = open_or_throw(path);
    auto sections = read_sections(in);

    PmsParams params;
    bool have_f_adv = false;
    bool have_f_s = false;
    bool have_f_elec = false;
    double f_elec = 0.0;
    std::string station_advanced_path;
    std::string station_standard_path;

    for (const auto& section : sections) {
        if (!section.name.empty())
            throw ParseError(path + ": unexpected section '" + section.name + "'");
        for (const auto& line : section.lines) {
            if (!is_key_value(line.text))
                throw ParseError(path + ":" + std::to_string(line.number) +
                                 ": expected key = value");
            auto [key, value] = split_key_value(line);
            if (key == "n_round")
                params.n_round = parse_number(value, path, line.number);
            else if (key == "p_m")
                params.p_m_years = parse_number(value, path, line.number);
            else if (key == "l_section")
                params.section_length_km = parse_number(value, path, line.number);
            else if (key == "l_t")
                params.l_t_km = parse_number(value, path, line.number);
            else if (key == "k_database")
                params.k_database = parse_number(value, path, line.number);
            else if (key == "i_hard")
                params.i_hard =
                    value_or_factor_ref(value, factors, UnitDim::PerItem, path, line.number);
            else if (key == "delta_hard")
                params.delta_hard_years = parse_number(value, path, line.number);
            else if (key == "i_yrun")
                params.i_yrun =
                    value_or_factor_ref(value, factors, UnitDim::PerYear, path, line.number);
            else if (key == "n_operation")
                params.n_operation = parse_number(value, path, line.number);
            else if (key == "k_t")
                params.k_t = parse_number(value, path, line.number);
            else if (key == "f_m")
                params.f_m =
                    value_or_factor_ref(value, factors, UnitDim::PerKm, path, line.number);
            else if (key == "f_elec") {
                f_elec = value_or_factor_ref(value, factors, UnitDim::PerKwh, path, line.number);
                have_f_elec = true;
            } else if (key == "f_transfer")
                params.f_transfer =
                    value_or_factor_ref(value, factors, UnitDim::PerGb, path, line.number);
            else if (key == "f_adv") {
                params.f_adv = parse_number(value, path, line.number);
                have_f_adv = true;
            } else if (key == "f_s") {
                params.f_s = parse_number(value, path, line.number);
                have_f_s = true;
            } else if (key == "station_advanced")
                station_advanced_path = resolve_relative(path, value);
            else if (key == "station_standard")
                station_standard_path = resolve_relative(path, value);
            else
                throw ParseError(path + ":" + std::to_string(line.number) + ": unknown key '" +
                                 key + "'");
        }
    }

    // Station factors: direct values win, otherwise derived from the profile
    // files and the grid factor.
    if (!have_f_adv) {
        if (station_advanced_path.empty())
            throw ParseError(path + ": f_adv needs a value or a station_advanced profile");
        if (!have_f_elec)
            throw ParseError(path + ": station factors need f_elec");
        params.f_adv = station_factor(load_station_profile_file(station_advanced_path), f_elec);
    }
    if (!have_f_s) {
        if (station_standard_path.empty())
            throw ParseError(path + ": f_s needs a value or a station_standard profile");
        if (!have_f_elec)
            throw ParseError(path + ": station factors need f_elec");
        params.f_s = station_factor(load_station_profile_file(station_standard_path), f_elec);
    }

    return params;
}

Scenario load_scenario_file(const std::string& path, const FactorSet& factors) {
    auto in = open_or_throw(path);
    auto sections = read_sections(in);

    Scenario scenario;
    for (const auto& section : sections) {
        if (section.name.empty()) {
            for (const auto& line : section.lines) {
                if (!is_key_value(line.text))
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": expected key = value");
                auto [key, value] = split_key_value(line);
                if (key == "name")
                    scenario.name = value;
                else
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": unknown key '" + key + "'");
            }
        } else if (section.name == "geometry") {
            for (const auto& line : section.lines) {
                auto [key, value] = split_key_value(line);
                if (key == "length_m")
                    scenario.geometry.length_m = parse_number(value, path, line.number);
                else if (key == "width_m")
                    scenario.geometry.width_m = parse_number(value, path, line.number);
                else if (key == "lifespan_years")
                    scenario.geometry.lifespan_years = parse_int(value, path, line.number);
                else if (key == "heavy_vehicles_per_day")
                    scenario.geometry.heavy_vehicles_per_day =
                        parse_number(value, path, line.number);
                else
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": unknown geometry key '" + key + "'");
            }
        } else if (section.name == "subgrade") {
            for (const auto& line : section.lines) {
                auto [key, value] = split_key_value(line);
                if (key == "pf2")
                    scenario.subgrade.pf2 = parse_number(value, path, line.number);
                else if (key == "pf2qs")
                    scenario.subgrade.pf2qs = parse_number(value, path, line.number);
                else if (key == "pf3")
                    scenario.subgrade.pf3 = parse_number(value, path, line.number);
                else
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": unknown subgrade key '" + key + "'");
            }
        } else if (section.name.rfind("schedule", 0) == 0) {
            const std::string cls_text = trim(section.name.substr(8));
            auto cls = parse_subgrade_class(cls_text);
            if (!cls)
                throw ParseError(path + ": unknown subgrade class '" + cls_text + "'");
            auto& ops = scenario.schedules[*cls];
            for (const auto& line : section.lines) {
                auto tokens = tokenize(line.text);
                if (tokens.size() != 5)
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": operation rows need year, kind, factor, thickness, "
                                     "fraction");
                RoadworksOp op;
                op.year = parse_int(tokens[0], path, line.number);
                auto kind = parse_op_kind(tokens[1]);
                if (!kind)
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": unknown operation kind '" + tokens[1] + "'");
                op.kind = *kind;
                op.factor_id = tokens[2];
                op.thickness_cm = parse_number(tokens[3], path, line.number);
                op.fraction = parse_number(tokens[4], path, line.number);
                ops.push_back(std::move(op));
            }
        } else if (section.name == "failure") {
            for (const auto& line : section.lines) {
                if (is_key_value(line.text)) {
                    auto [key, value] = split_key_value(line);
                    if (key == "factor_id")
                        scenario.failures.factor_id = value;
                    else if (key == "thickness_cm")
                        scenario.failures.thickness_cm = parse_number(value, path, line.number);
                    else
                        throw ParseError(path + ":" + std::to_string(line.number) +
                                         ": unknown failure key '" + key + "'");
                } else {
                    auto tokens = tokenize(line.text);
                    if (tokens.size() != 2)
                        throw ParseError(path + ":" + std::to_string(line.number) +
                                         ": failure rows need year and cumulative fraction");
                    FailurePoint pt;
                    pt.year = parse_int(tokens[0], path, line.number);
                    pt.cumulative_fraction = parse_number(tokens[1], path, line.number);
                    scenario.failures.points.push_back(pt);
                }
            }
        } else if (section.name == "pms") {
            for (const auto& line : section.lines) {
                auto [key, value] = split_key_value(line);
                if (key == "params")
                    scenario.pms = load_pms_params_file(resolve_relative(path, value), factors);
                else
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": unknown pms key '" + key + "'");
            }
        } else {
            throw ParseError(path + ": unknown section '" + section.name + "'");
        }
    }

    if (scenario.name.empty())
        scenario.name = fs::path(path).stem().string();
    return scenario;
}

PublishedPms load_published_pms_file(const std::string& path) {
    auto in = open_or_throw(path);

    PublishedPms published;
    std::map<std::string, double> values;

    std::string raw;
    int number = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++number;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen) {
            if (line != "component,value_kg,printed_share_pct")
                throw ParseError(path + ":" + std::to_string(number) +
                                 ": expected header 'component,value_kg,printed_share_pct'");
            header_seen = true;
            continue;
        }
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
        if (fields.size() != 3)
            throw ParseError(path + ":" + std::to_string(number) + ": expected 3 fields");
        const std::string component = fields[0];
        const double value = parse_number(fields[1], path, number);
        if (component == "total")
            published.printed_total = value;
        else
            values[component] = value;
        if (!fields[2].empty())
            published.printed_share_pct[component] = parse_number(fields[2], path, number);
    }

    for (const char* required : {"collection", "storage", "planning"})
        if (!values.count(required))
            throw ParseError(path + ": missing component '" + std::string(required) + "'");

    // Values are carried exactly as printed; printed sub-splits do not
    // always sum to their component, so no reconstruction is attempted.
    PmsBreakdown& b = published.values;
    b.collection = values["collection"];
    b.storage = values["storage"];
    b.planning = values["planning"];
    b.storage_hardware = values.count("storage_hardware") ? values["storage_hardware"] : 0.0;
    b.storage_running = values.count("storage_running") ? values["storage_running"] : 0.0;
    b.planning_local = values.count("planning_local") ? values["planning_local"] : 0.0;
    b.planning_transfer = values.count("planning_transfer") ? values["planning_transfer"] : 0.0;
    b.total = b.collection + b.storage + b.planning;
    return published;
}

SweepSpec load_sweep_spec_file(const std::string& path, const FactorSet& factors) {
    auto in = open_or_throw(path);
    auto sections = read_sections(in);

    SweepSpec spec;
    std::array<std::string, 3> template_paths;

    for (const auto& section : sections) {
        if (section.name.empty()) {
            for (const auto& line : section.lines) {
                auto [key, value] = split_key_value(line);
                if (key == "name")
                    spec.name = value;
                else
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": unknown key '" + key + "'");
            }
        } else if (section.name == "templates") {
            for (const auto& line : section.lines) {
                auto [key, value] = split_key_value(line);
                if (key == "s1")
                    template_paths[0] = value;
                else if (key == "s2")
                    template_paths[1] = value;
                else if (key == "s3")
                    template_paths[2] = value;
                else
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": template keys are s1, s2, s3");
            }
        } else if (section.name == "scopes") {
            for (const auto& line : section.lines) {
                auto scope = parse_scope(line.text);
                if (!scope)
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": unknown scope '" + line.text + "'");
                spec.scopes.push_back(*scope);
            }
        } else if (section.name == "vectors") {
            for (const auto& line : section.lines) {
                auto tokens = tokenize(line.text);
                if (tokens.size() != 4)
                    throw ParseError(path + ":" + std::to_string(line.number) +
                                     ": vector rows need label, pf2, pf2qs, pf3");
                LabeledVector vec;
                vec.label = tokens[0];
                vec.shares.pf2 = parse_number(tokens[1], path, line.number);
                vec.shares.pf2qs = parse_number(tokens[2], path, line.number);
                vec.shares.pf3 = parse_number(tokens[3], path, line.number);
                spec.vectors.push_back(std::move(vec));
            }
        } else {
            throw ParseError(path + ": unknown section '" + section.name + "'");
        }
    }

    for (std::size_t i = 0; i < 3; ++i) {
        if (template_paths[i].empty())
            throw ParseError(path + ": missing scenario template s" + std::to_string(i + 1));
        spec.templates[i] = load_scenario_file(resolve_relative(path, template_paths[i]), factors);
    }
    if (spec.scopes.empty())
        spec.scopes.push_back(Scope::FullLifecycle);
    return spec;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot write '" + tmp.string() + "'");
        out << content;
        if (!out)
            throw IoError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("cannot rename '" + tmp.string() + "' to '" + target.string() +
                      "': " + ec.message());
    }
}

} // namespace pavelca
