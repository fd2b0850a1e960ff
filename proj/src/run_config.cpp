#include "netecon/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace netecon {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& key, int line, const std::string& what) {
    std::ostringstream msg;
    msg << "config error: key '" << key << "'";
    if (line > 0) msg << " (line " << line << ")";
    msg << ": " << what;
    throw std::runtime_error(msg.str());
}

double parse_double(const std::string& key, int line, const std::string& value) {
    const std::string v = trim(value);
    if (v.empty()) fail(key, line, "empty value");
    char* end = nullptr;
    const double parsed = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size()) fail(key, line, "malformed number '" + v + "'");
    if (!std::isfinite(parsed)) fail(key, line, "value must be finite");
    return parsed;
}

int parse_int(const std::string& key, int line, const std::string& value) {
    const double parsed = parse_double(key, line, value);
    const int as_int = static_cast<int>(parsed);
    if (static_cast<double>(as_int) != parsed) fail(key, line, "expected an integer");
    return as_int;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value, int line) {
    MarketParams& m = cfg.market;
    OptimizerConfig& opt = cfg.optimizer;
    if (key == "n_users") m.n_users_total = parse_double(key, line, value);
    else if (key == "n_cps") m.n_cps_total = parse_double(key, line, value);
    else if (key == "r_u") m.standalone_user = parse_double(key, line, value);
    else if (key == "r_c") m.standalone_cp = parse_double(key, line, value);
    else if (key == "delta") m.cp_to_user_effect = parse_double(key, line, value);
    else if (key == "gamma") m.ad_revenue_per_user = parse_double(key, line, value);
    else if (key == "a") m.cp_isp_price = parse_double(key, line, value);
    else if (key == "halfwidth") opt.search_halfwidth = parse_double(key, line, value);
    else if (key == "coarse_grid") opt.coarse_grid = parse_int(key, line, value);
    else if (key == "refine_rounds") opt.refine_rounds = parse_int(key, line, value);
    else if (key == "outer_coarse_grid") opt.outer_coarse_grid = parse_int(key, line, value);
    else if (key == "outer_refine_rounds") opt.outer_refine_rounds = parse_int(key, line, value);
    else if (key == "outer_top_cells") opt.outer_top_cells = parse_int(key, line, value);
    else if (key == "nested_coarse_grid") opt.nested_coarse_grid = parse_int(key, line, value);
    else if (key == "nested_refine_rounds") opt.nested_refine_rounds = parse_int(key, line, value);
    else if (key == "zoom_factor") opt.zoom_factor = parse_double(key, line, value);
    else if (key == "value_tie_tol") opt.value_tie_tol = parse_double(key, line, value);
    else if (key == "threads") opt.threads = parse_int(key, line, value);
    else if (key == "out_dir") {
        const std::string v = trim(value);
        if (v.empty()) fail(key, line, "empty path");
        cfg.out_dir = v;
    } else if (key == "format") {
        const std::string v = trim(value);
        if (v == "csv") cfg.format = OutputFormat::csv;
        else if (v == "text" || v == "structured-text") cfg.format = OutputFormat::text;
        else fail(key, line, "expected 'csv' or 'text', got '" + v + "'");
    } else {
        fail(key, line, "unknown key");
    }
}

} // namespace

RunConfig parse_config(const std::string& file_text,
                       const std::vector<std::pair<std::string, std::string>>& flag_overrides) {
    RunConfig cfg;
    std::istringstream in(file_text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto comment = raw.find('#');
        if (comment != std::string::npos) raw.erase(comment);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail("<missing>", line_no, "empty key");
        apply(cfg, key, value, line_no);
    }
    for (const auto& [key, value] : flag_overrides) {
        apply(cfg, key, value, 0);
    }
    validate(cfg.market);
    validate(cfg.optimizer);
    return cfg;
}

std::string serialize(const RunConfig& cfg) {
    std::ostringstream out;
    char buf[40];
    auto num = [&](const char* key, double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << key << " = " << buf << "\n";
    };
    auto integer = [&](const char* key, int v) { out << key << " = " << v << "\n"; };
    num("n_users", cfg.market.n_users_total);
    num("n_cps", cfg.market.n_cps_total);
    num("r_u", cfg.market.standalone_user);
    num("r_c", cfg.market.standalone_cp);
    num("delta", cfg.market.cp_to_user_effect);
    num("gamma", cfg.market.ad_revenue_per_user);
    num("a", cfg.market.cp_isp_price);
    num("halfwidth", cfg.optimizer.search_halfwidth);
    integer("coarse_grid", cfg.optimizer.coarse_grid);
    integer("refine_rounds", cfg.optimizer.refine_rounds);
    integer("outer_coarse_grid", cfg.optimizer.outer_coarse_grid);
    integer("outer_refine_rounds", cfg.optimizer.outer_refine_rounds);
    integer("outer_top_cells", cfg.optimizer.outer_top_cells);
    integer("nested_coarse_grid", cfg.optimizer.nested_coarse_grid);
    integer("nested_refine_rounds", cfg.optimizer.nested_refine_rounds);
    num("zoom_factor", cfg.optimizer.zoom_factor);
    num("value_tie_tol", cfg.optimizer.value_tie_tol);
    integer("threads", cfg.optimizer.threads);
    out << "out_dir = " << cfg.out_dir << "\n";
    out << "format = " << (cfg.format == OutputFormat::csv ? "csv" : "text") << "\n";
    return out.str();
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    return serialize(a) == serialize(b);
}

} // namespace netecon
