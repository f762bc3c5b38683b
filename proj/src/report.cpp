#include "pavelca/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace pavelca {

std::optional<TableFormat> parse_table_format(std::string_view text) {
    if (text == "table")
        return TableFormat::Plain;
    if (text == "csv")
        return TableFormat::Csv;
    if (text == "md" || text == "markdown")
        return TableFormat::Markdown;
    return std::nullopt;
}

std::string format_fixed(double value, int digits) {
    if (digits < 0)
        digits = 0;
    if (!std::isfinite(value))
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");

    const double scale = std::pow(10.0, digits);
    // nearbyint under the default rounding mode resolves ties to even.
    double rounded = std::nearbyint(value * scale);
    if (rounded == 0.0)
        rounded = 0.0; // fold negative zero

    if (std::abs(rounded) < 9.0e15) {
        auto n = static_cast<long long>(rounded);
        const bool negative = n < 0;
        std::string body = std::to_string(negative ? -n : n);
        if (static_cast<int>(body.size()) <= digits)
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        std::string out = negative ? "-" : "";
        out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
        if (digits > 0) {
            out += '.';
            out += body.substr(body.size() - static_cast<std::size_t>(digits));
        }
        return out;
    }

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

namespace {

std::string render_plain(const TextTable& table) {
    std::vector<std::size_t> widths(table.header.size(), 0);
    auto grow = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    };
    grow(table.header);
    for (const auto& row : table.rows)
        grow(row);

    std::ostringstream out;
    auto put = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < widths.size(); ++i) {
            const std::string& cell = i < row.size() ? row[i] : std::string();
            if (i == 0) {
                out << cell << std::string(widths[i] - cell.size(), ' ');
            } else {
                out << "  " << std::string(widths[i] - cell.size(), ' ') << cell;
            }
        }
        out << '\n';
    };
    put(table.header);
    for (const auto& row : table.rows)
        put(row);
    return out.str();
}

std::string join(const std::vector<std::string>& cells, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
            out += sep;
        out += cells[i];
    }
    return out;
}

std::string render_csv(const TextTable& table) {
    std::string out = join(table.header, ",") + "\n";
    for (const auto& row : table.rows)
        out += join(row, ",") + "\n";
    return out;
}

std::string render_markdown(const TextTable& table) {
    std::string out = "| " + join(table.header, " | ") + " |\n|";
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out += i == 0 ? ":---|" : "---:|";
    out += "\n";
    for (const auto& row : table.rows)
        out += "| " + join(row, " | ") + " |\n";
    return out;
}

} // namespace

std::string render(const TextTable& table, TableFormat format) {
    switch (format) {
    case TableFormat::Plain: return render_plain(table);
    case TableFormat::Csv: return render_csv(table);
    case TableFormat::Markdown: return render_markdown(table);
    }
    return render_plain(table);
}

void emit_plot_data(const SweepResult& result, std::ostream& out, int digits) {
    out << "vector,scenario,scope,total_kg,s3_vs_s1_pct,s3_vs_s2_pct\n";

    std::vector<std::string> labels;
    for (const auto& vec : result.vectors)
        labels.push_back(vec.label);
    std::sort(labels.begin(), labels.end());

    for (const auto& label : labels) {
        for (Scope scope : result.scopes) {
            const SweepSavings& savings = result.savings_for(label, scope);
            for (const auto& scenario : result.scenario_names) {
                out << label << ',' << scenario << ',' << to_string(scope) << ','
                    << format_fixed(result.total(label, scenario, scope), digits) << ','
                    << format_fixed(savings.s3_vs_s1_pct, digits) << ','
                    << format_fixed(savings.s3_vs_s2_pct, digits) << '\n';
            }
        }
    }
}

} // namespace pavelca
