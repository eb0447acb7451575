#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hypercs/thermal.hpp"

namespace hypercs {

/// Column-named numeric table, the common shape of every tabulating command.
struct NumericTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV with a header row and 17-significant-digit values, so a re-parse
/// recovers every double bit-exactly.
std::string table_to_csv(const NumericTable& table);
nlohmann::json table_to_json(const NumericTable& table);

nlohmann::json report_to_json(const VerifyReport& report);
/// Aggregate form used by the all-suites run: {"suite": "all", "pass": ...,
/// "suites": [...]}.
nlohmann::json reports_to_json(const std::vector<VerifyReport>& reports);

/// Flat CSV of check rows; a leading suite column keeps multi-suite output
/// in one file.
std::string reports_to_csv(const std::vector<VerifyReport>& reports);

/// One human-readable verdict line per suite, e.g.
/// "[PASS] identity  max rel err 1.2e-09 (tol 1e-06)".
std::string report_summary_line(const VerifyReport& report);

}  // namespace hypercs
