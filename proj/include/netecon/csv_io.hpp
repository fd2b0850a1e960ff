// CSV emission for sweep and scenario results: fixed 17-column header,
// full-precision doubles, deterministic bytes.
#pragma once

#include "netecon/scenario.hpp"

#include <string>
#include <vector>

namespace netecon {

inline constexpr const char* kCsvHeader =
    "param_name,param_value,scenario,alpha,beta,b,c,n_u,n_c,profit_platform,profit_isp,"
    "user_utility,cp_profit,CS,CPS,SW,flag";

std::string csv_line(const SweepRow& row);

/// Whole-file CSV body (header plus one line per row).
std::string to_csv(const std::vector<SweepRow>& rows);

/// Writes the CSV to `path`. Throws std::runtime_error on empty input
/// (no file is created) or when the destination cannot be written.
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);

/// Wraps plain scenario results as rows so single solves and comparisons can
/// share the CSV format; `param_name`/`param_value` mark the run kind.
std::vector<SweepRow> as_rows(const std::vector<ScenarioResult>& results,
                              const std::string& param_name, double param_value);

} // namespace netecon
