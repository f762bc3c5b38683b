#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pavelca/lifecycle.hpp"

namespace pavelca {

struct LabeledVector {
    std::string label;
    SubgradeProfile shares;
};

/// Sweep of subgrade-evolution vectors across the three scenario templates.
/// Template order is (massive, progressive preplanned, progressive+PMS);
/// pairwise savings are computed for the PMS scenario against the other two.
struct SweepSpec {
    std::string name;
    std::vector<LabeledVector> vectors;
    std::array<Scenario, 3> templates;
    std::vector<Scope> scopes;
};

std::vector<std::string> validate(const SweepSpec& spec);

struct SweepCell {
    std::string vector_label;
    std::string scenario;
    Scope scope = Scope::FullLifecycle;
    double total_kg = 0.0;
};

struct SweepSavings {
    std::string vector_label;
    Scope scope = Scope::FullLifecycle;
    double s3_vs_s1_pct = 0.0;
    double s3_vs_s2_pct = 0.0;
};

struct SweepExtrema {
    Scope scope = Scope::FullLifecycle;
    double max_s3_vs_s1_pct = 0.0;
    std::string argmax_s3_vs_s1;
    double max_s3_vs_s2_pct = 0.0;
    std::string argmax_s3_vs_s2;
};

struct SweepResult {
    std::string name;
    std::array<std::string, 3> scenario_names;
    std::vector<LabeledVector> vectors;
    std::vector<Scope> scopes;
    std::vector<SweepCell> cells;       // vector-major, then scenario, then scope
    std::vector<SweepSavings> savings;  // vector-major, then scope
    std::vector<SweepExtrema> extrema;  // one per scope

    bool has_scope(Scope scope) const;
    double total(const std::string& vector_label, const std::string& scenario, Scope scope) const;
    const SweepSavings& savings_for(const std::string& vector_label, Scope scope) const;
    const SweepExtrema& extrema_for(Scope scope) const;
};

// Evaluates every (vector, template, scope) cell through scenario_footprint;
// assembly is deterministic in spec order regardless of evaluation order.
SweepResult run_sweep(const SweepSpec& spec, const FactorSet& factors);

enum class ShareAxis { Pf2, Pf2qs, Pf3 };

std::string_view to_string(ShareAxis axis);
double axis_value(const SubgradeProfile& shares, ShareAxis axis);

struct TrendReport {
    ShareAxis axis = ShareAxis::Pf3;
    Scope scope = Scope::FullLifecycle;
    double equivalence_threshold_pct = 1.0;
    bool nondecreasing = true;          // PMS savings never drop as the axis share grows
    bool zero_axis_equivalent = true;   // |savings| below threshold where the axis share is 0
    double max_abs_zero_axis_pct = 0.0;
    std::vector<std::string> notes;     // one line per violated pair/vector
};

// Requires result vectors already ordered by nondecreasing axis share;
// throws std::invalid_argument ("unordered axis") otherwise.
TrendReport trend_check(const SweepResult& result, ShareAxis axis,
                        double equivalence_threshold_pct = 1.0,
                        Scope scope = Scope::FullLifecycle);

// (max S3-vs-S2 %, max S3-vs-S1 %) over vectors under the service-life scope.
// Throws std::invalid_argument when that scope is absent from the result.
std::pair<double, double> service_life_extrema(const SweepResult& result);

} // namespace pavelca
