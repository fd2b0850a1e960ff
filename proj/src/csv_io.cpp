#include "netecon/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace netecon {

namespace {

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

} // namespace

std::string csv_line(const SweepRow& row) {
    std::string out;
    out.reserve(360);
    out += row.parameter;
    out += ',';
    append_number(out, row.value);
    out += ',';
    out += to_string(row.result.kind);
    const Outcome& o = row.result.outcome;
    const double fields[] = {row.result.prices.platform_cp_fee,
                             row.result.prices.platform_user_fee,
                             row.result.prices.isp_user_price,
                             row.result.prices.isp_cp_price,
                             row.result.participation.subscribers,
                             row.result.participation.joined_cps,
                             o.platform_profit,
                             o.access_isp_profit,
                             o.user_utility,
                             o.cp_profit,
                             o.consumer_surplus,
                             o.cp_surplus,
                             o.social_welfare};
    for (double v : fields) {
        out += ',';
        append_number(out, v);
    }
    out += ',';
    out += row.flag;
    return out;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const SweepRow& row : rows) {
        out += csv_line(row);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    if (rows.empty()) {
        throw std::runtime_error("write_csv: refusing to write an empty table to " + path);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_csv: cannot open " + path);
    }
    out << to_csv(rows);
    if (!out) {
        throw std::runtime_error("write_csv: failed writing " + path);
    }
}

std::vector<SweepRow> as_rows(const std::vector<ScenarioResult>& results,
                              const std::string& param_name, double param_value) {
    std::vector<SweepRow> rows;
    rows.reserve(results.size());
    for (const ScenarioResult& r : results) {
        SweepRow row;
        row.parameter = param_name;
        row.value = param_value;
        row.result = r;
        std::string flag = r.diagnostic;
        for (char& ch : flag) {
            if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
        }
        row.flag = flag;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace netecon
