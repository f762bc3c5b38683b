#include "pavelca/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pavelca {

std::vector<std::string> validate(const SweepSpec& spec) {
    std::vector<std::string> violations;
    if (spec.vectors.empty())
        violations.push_back("sweep spec needs at least one vector");
    for (const auto& v : spec.vectors) {
        for (auto msg : validate(v.shares))
            violations.push_back("vector '" + v.label + "': " + std::move(msg));
    }
    if (spec.scopes.empty())
        violations.push_back("sweep spec needs at least one scope");
    for (const auto& tmpl : spec.templates) {
        for (auto msg : validate(tmpl))
            violations.push_back("template '" + tmpl.name + "': " + std::move(msg));
    }
    return violations;
}

bool SweepResult::has_scope(Scope scope) const {
    return std::find(scopes.begin(), scopes.end(), scope) != scopes.end();
}

double SweepResult::total(const std::string& vector_label, const std::string& scenario,
                          Scope scope) const {
    for (const auto& cell : cells)
        if (cell.vector_label == vector_label && cell.scenario == scenario && cell.scope == scope)
            return cell.total_kg;
    throw std::out_of_range("no sweep cell for vector '" + vector_label + "', scenario '" +
                            scenario + "'");
}

const SweepSavings& SweepResult::savings_for(const std::string& vector_label, Scope scope) const {
    for (const auto& s : savings)
        if (s.vector_label == vector_label && s.scope == scope)
            return s;
    throw std::out_of_range("no sweep savings for vector '" + vector_label + "'");
}

const SweepExtrema& SweepResult::extrema_for(Scope scope) const {
    for (const auto& e : extrema)
        if (e.scope == scope)
            return e;
    throw std::out_of_range("scope absent from sweep result");
}

SweepResult run_sweep(const SweepSpec& spec, const FactorSet& factors) {
    auto violations = validate(spec);
    if (!violations.empty())
        throw std::invalid_argument("invalid sweep spec: " + violations.front());

    SweepResult result;
    result.name = spec.name;
    for (std::size_t i = 0; i < 3; ++i)
        result.scenario_names[i] = spec.templates[i].name;
    result.vectors = spec.vectors;
    result.scopes = spec.scopes;

    for (const auto& vec : spec.vectors) {
        // Same code path as a standalone footprint evaluation: the template
        // with the vector's shares substituted.
        std::array<StageBreakdown, 3> full;
        for (std::size_t i = 0; i < 3; ++i) {
            Scenario scenario = spec.templates[i];
            scenario.subgrade = vec.shares;
            full[i] = scenario_footprint(scenario, factors);
        }
        for (Scope scope : spec.scopes) {
            std::array<double, 3> totals{};
            for (std::size_t i = 0; i < 3; ++i) {
                totals[i] = scope_filter(full[i], scope).total;
                result.cells.push_back({vec.label, result.scenario_names[i], scope, totals[i]});
            }
            SweepSavings s;
            s.vector_label = vec.label;
            s.scope = scope;
            s.s3_vs_s1_pct = totals[0] != 0.0 ? 100.0 * (totals[0] - totals[2]) / totals[0] : 0.0;
            s.s3_vs_s2_pct = totals[1] != 0.0 ? 100.0 * (totals[1] - totals[2]) / totals[1] : 0.0;
            result.savings.push_back(std::move(s));
        }
    }

    for (Scope scope : spec.scopes) {
        SweepExtrema ext;
        ext.scope = scope;
        ext.max_s3_vs_s1_pct = -std::numeric_limits<double>::infinity();
        ext.max_s3_vs_s2_pct = -std::numeric_limits<double>::infinity();
        for (const auto& s : result.savings) {
            if (s.scope != scope)
                continue;
            if (s.s3_vs_s1_pct > ext.max_s3_vs_s1_pct) {
                ext.max_s3_vs_s1_pct = s.s3_vs_s1_pct;
                ext.argmax_s3_vs_s1 = s.vector_label;
            }
            if (s.s3_vs_s2_pct > ext.max_s3_vs_s2_pct) {
                ext.max_s3_vs_s2_pct = s.s3_vs_s2_pct;
                ext.argmax_s3_vs_s2 = s.vector_label;
            }
        }
        result.extrema.push_back(std::move(ext));
    }

    return result;
}

std::string_view to_string(ShareAxis axis) {
    switch (axis) {
    case ShareAxis::Pf2: return "pf2";
    case ShareAxis::Pf2qs: return "pf2qs";
    case ShareAxis::Pf3: return "pf3";
    }
    return "pf3";
}

double axis_value(const SubgradeProfile& shares, ShareAxis axis) {
    switch (axis) {
    case ShareAxis::Pf2: return shares.pf2;
    case ShareAxis::Pf2qs: return shares.pf2qs;
    case ShareAxis::Pf3: return shares.pf3;
    }
    return shares.pf3;
}

TrendReport trend_check(const SweepResult& result, ShareAxis axis,
                        double equivalence_threshold_pct, Scope scope) {
    if (!result.has_scope(scope))
        throw std::invalid_argument("requested scope absent from sweep result");
    for (std::size_t i = 1; i < result.vectors.size(); ++i) {
        if (axis_value(result.vectors[i].shares, axis) <
            axis_value(result.vectors[i - 1].shares, axis))
            throw std::invalid_argument("unordered axis: vectors are not sorted by " +
                                        std::string(to_string(axis)) + " share");
    }

    TrendReport report;
    report.axis = axis;
    report.scope = scope;
    report.equivalence_threshold_pct = equivalence_threshold_pct;

    constexpr double kTiePct = 1e-9; // slack for exact floating-point ties

    for (std::size_t i = 1; i < result.vectors.size(); ++i) {
        const auto& prev = result.vectors[i - 1];
        const auto& cur = result.vectors[i];
        if (axis_value(cur.shares, axis) <= axis_value(prev.shares, axis))
            continue; // only compare across a strict increase of the axis share
        const double before = result.savings_for(prev.label, scope).s3_vs_s2_pct;
        const double after = result.savings_for(cur.label, scope).s3_vs_s2_pct;
        if (after < before - kTiePct) {
            report.nondecreasing = false;
            std::ostringstream os;
            os << "savings drop from " << before << "% (" << prev.label << ") to " << after
               << "% (" << cur.label << ")";
            report.notes.push_back(os.str());
        }
    }

    for (const auto& vec : result.vectors) {
        if (axis_value(vec.shares, axis) != 0.0)
            continue;
        const double saving = result.savings_for(vec.label, scope).s3_vs_s2_pct;
        report.max_abs_zero_axis_pct = std::max(report.max_abs_zero_axis_pct, std::abs(saving));
        if (std::abs(saving) > equivalence_threshold_pct) {
            report.zero_axis_equivalent = false;
            std::ostringstream os;
            os << "vector " << vec.label << ": |" << saving << "%| exceeds "
               << equivalence_threshold_pct << " point threshold";
            report.notes.push_back(os.str());
        }
    }

    return report;
}

std::pair<double, double> service_life_extrema(const SweepResult& result) {
    if (!result.has_scope(Scope::ServiceLife))
        throw std::invalid_argument("service-life scope absent from sweep result");
    const SweepExtrema& ext = result.extrema_for(Scope::ServiceLife);
    return {ext.max_s3_vs_s2_pct, ext.max_s3_vs_s1_pct};
}

} // namespace pavelca
