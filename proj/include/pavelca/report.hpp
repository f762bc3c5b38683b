#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pavelca/sensitivity.hpp"

namespace pavelca {

enum class TableFormat { Plain, Csv, Markdown };

std::optional<TableFormat> parse_table_format(std::string_view text);

// Fixed-point rendering with round-half-even ties, so repeated runs are
// byte-identical. digits >= 0.
std::string format_fixed(double value, int digits);

struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string render(const TextTable& table, TableFormat format);

// Long-format sweep data behind the savings figures: one row per
// (vector, scenario, scope) with the two pairwise savings columns, sorted
// by vector label. Always comma-separated regardless of report format.
void emit_plot_data(const SweepResult& result, std::ostream& out, int digits = 2);

} // namespace pavelca
