#include "netecon/text_report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace netecon {

namespace {

std::string num(double v, const char* fmt = "%.10g") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

const char* ordinal(int pos) {
    switch (pos) {
        case 0: return "1st";
        case 1: return "2nd";
        case 2: return "3rd";
        default: return "4th";
    }
}

// Rank label of one scenario: the position span of its tie group.
std::string rank_label(const MetricComparison& cmp, int idx) {
    int lo = 3, hi = 0;
    for (int j = 0; j < 4; ++j) {
        if (cmp.group[j] == cmp.group[idx]) {
            lo = std::min(lo, cmp.position[j]);
            hi = std::max(hi, cmp.position[j]);
        }
    }
    if (lo == hi) return ordinal(lo);
    return std::string(ordinal(lo)) + "-" + ordinal(hi);
}

void row(std::ostringstream& out, const std::string& label,
         const std::array<std::string, 4>& cells) {
    out << "  " << label;
    for (std::size_t n = label.size(); n < 18; ++n) out << ' ';
    for (const std::string& cell : cells) {
        out << cell;
        for (std::size_t n = cell.size(); n < 14; ++n) out << ' ';
    }
    out << "\n";
}

} // namespace

std::string format_scenario_text(const MarketParams& params, const ScenarioResult& r) {
    std::ostringstream out;
    out << "scenario: " << to_string(r.kind) << "\n";
    out << "prices:\n";
    out << "  alpha = " << num(r.prices.platform_cp_fee) << "\n";
    out << "  beta  = " << num(r.prices.platform_user_fee) << "\n";
    out << "  b     = " << num(r.prices.isp_user_price) << "\n";
    out << "  c     = " << num(r.prices.isp_cp_price) << "\n";
    out << "participation:\n";
    out << "  n_u = " << num(r.participation.subscribers) << " ("
        << to_string(r.participation.user_regime) << ")\n";
    out << "  n_c = " << num(r.participation.joined_cps) << " ("
        << to_string(r.participation.cp_regime) << ")\n";
    out << "outcome:\n";
    out << "  user_utility    = " << num(r.outcome.user_utility) << "\n";
    out << "  cp_profit       = " << num(r.outcome.cp_profit) << "\n";
    out << "  profit_platform = " << num(r.outcome.platform_profit) << "\n";
    out << "  profit_isp      = " << num(r.outcome.access_isp_profit) << "\n";
    out << "  CS              = " << num(r.outcome.consumer_surplus) << "\n";
    out << "  CPS             = " << num(r.outcome.cp_surplus) << "\n";
    out << "  SW              = " << num(r.outcome.social_welfare) << "\n";
    out << "  cp_isp_revenue  = " << num(cp_isp_revenue(params, r.participation))
        << "  # informational, outside SW\n";
    if (!r.diagnostic.empty()) {
        out << "diagnostic: " << r.diagnostic << "\n";
    }
    return out.str();
}

std::string format_comparison_text(const ComparisonTable& table) {
    std::ostringstream out;
    out << "scenario comparison (ties within " << num(table.tie_tol_rel)
        << " relative)\n";
    row(out, "metric", {"pnn", "pn", "ann", "an"});
    for (const MetricComparison& cmp : table.metrics) {
        std::array<std::string, 4> cells;
        for (int i = 0; i < 4; ++i) cells[i] = rank_label(cmp, i);
        row(out, cmp.name, cells);
    }
    out << "values\n";
    for (const MetricComparison& cmp : table.metrics) {
        std::array<std::string, 4> cells;
        for (int i = 0; i < 4; ++i) cells[i] = num(cmp.value[i], "%.8g");
        row(out, cmp.name, cells);
    }
    return out.str();
}

std::string plot_script(const std::string& csv_name, const std::string& param_name,
                        const std::string& metric, const std::vector<ScenarioKind>& kinds) {
    std::ostringstream out;
    out << "# " << metric << " vs " << param_name << ", one curve per scenario\n";
    out << "set datafile separator \",\"\n";
    out << "set datafile columnheaders\n";
    out << "set key outside\n";
    out << "set xlabel \"" << param_name << "\"\n";
    out << "set ylabel \"" << metric << "\"\n";
    out << "set term pngcairo size 960,640\n";
    out << "set output \"sweep_" << param_name << "_" << metric << ".png\"\n";
    out << "plot \\\n";
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        const char* name = to_string(kinds[i]);
        out << "  \"" << csv_name << "\" using (column(\"param_value\")):(stringcolumn(\"scenario\") eq \""
            << name << "\" ? column(\"" << metric << "\") : 1/0) with linespoints title \"" << name
            << "\"";
        out << (i + 1 < kinds.size() ? ", \\\n" : "\n");
    }
    return out.str();
}

} // namespace netecon
