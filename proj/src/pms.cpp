#include "pavelca/pms.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pavelca {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

std::vector<std::string> validate(const PmsParams& p) {
    std::vector<std::string> violations;
    const struct { const char* name; double v; } nonneg[] = {
        {"n_round", p.n_round},         {"p_m", p.p_m_years},
        {"l_section", p.section_length_km}, {"f_m", p.f_m},
        {"l_t", p.l_t_km},              {"k_database", p.k_database},
        {"i_hard", p.i_hard},           {"delta_hard", p.delta_hard_years},
        {"i_yrun", p.i_yrun},           {"n_operation", p.n_operation},
        {"k_t", p.k_t},                 {"f_transfer", p.f_transfer},
        {"f_adv", p.f_adv},             {"f_s", p.f_s},
    };
    for (const auto& field : nonneg)
        if (field.v < 0.0)
            violations.push_back(std::string(field.name) + " must be >= 0 (got " + fmt(field.v) +
                                 ")");
    if (!(p.delta_hard_years > 0.0))
        violations.push_back("delta_hard must be > 0");
    if (!(p.l_t_km > 0.0))
        violations.push_back("l_t must be > 0");
    if (p.k_database > 1.0)
        violations.push_back("k_database must be <= 1");
    return violations;
}

PmsBreakdown PmsBreakdown::from_components(double collection, double storage_hardware,
                                           double storage_running, double planning_local,
                                           double planning_transfer) {
    PmsBreakdown b;
    b.collection = collection;
    b.storage_hardware = storage_hardware;
    b.storage_running = storage_running;
    b.storage = storage_hardware + storage_running;
    b.planning_local = planning_local;
    b.planning_transfer = planning_transfer;
    b.planning = planning_local + planning_transfer;
    b.total = b.collection + b.storage + b.planning;
    return b;
}

double data_collection_gwp(const PmsParams& p) {
    return p.n_round * p.p_m_years * p.section_length_km * p.f_m;
}

std::pair<double, double> storage_gwp(const PmsParams& p) {
    if (p.l_t_km == 0.0)
        throw std::invalid_argument("storage GWP: division by zero (l_t = 0)");
    if (p.delta_hard_years == 0.0)
        throw std::invalid_argument("storage GWP: division by zero (delta_hard = 0)");
    const double allocation = p.p_m_years * p.section_length_km / p.l_t_km * p.k_database;
    const double hardware = allocation * p.i_hard / p.delta_hard_years;
    const double running = allocation * p.i_yrun;
    return {hardware, running};
}

std::pair<double, double> planning_gwp(const PmsParams& p) {
    const double base = p.n_operation * p.p_m_years * p.section_length_km;
    const double local = base * (p.f_adv + p.f_s);
    const double transfer = base * p.k_t * p.f_transfer;
    return {local, transfer};
}

PmsBreakdown pms_total(const PmsParams& p) {
    const double collection = data_collection_gwp(p);
    const auto [hardware, running] = storage_gwp(p);
    const auto [local, transfer] = planning_gwp(p);
    return PmsBreakdown::from_components(collection, hardware, running, local, transfer);
}

const ReconciliationRow* ReconciliationReport::find(const std::string& component) const {
    for (const auto& row : rows)
        if (row.component == component)
            return &row;
    return nullptr;
}

ReconciliationReport reconcile_with_published(const PmsBreakdown& computed,
                                              const PmsBreakdown& published, double threshold) {
    ReconciliationReport report;
    report.threshold = threshold;

    auto add = [&](const char* name, double comp, double pub) {
        ReconciliationRow row;
        row.component = name;
        row.computed = comp;
        row.published = pub;
        row.abs_delta = comp - pub;
        row.ratio = pub != 0.0 ? comp / pub
                               : (comp == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
        row.flagged = std::abs(row.ratio - 1.0) > threshold;
        report.rows.push_back(std::move(row));
    };

    add("collection", computed.collection, published.collection);
    add("storage", computed.storage, published.storage);
    add("planning", computed.planning, published.planning);
    add("total", computed.total, published.total);
    return report;
}

} // namespace pavelca
