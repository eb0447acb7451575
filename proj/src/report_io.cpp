#include "hypercs/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace hypercs {

namespace {

std::string round_trip_decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string table_to_csv(const NumericTable& table) {
    std::ostringstream os;
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << round_trip_decimal(row[c]);
        os << "\n";
    }
    return os.str();
}

nlohmann::json table_to_json(const NumericTable& table) {
    return {{"columns", table.columns}, {"rows", table.rows}};
}

nlohmann::json report_to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRow& row : report.checks) {
        checks.push_back({{"name", row.name},
                          {"lhs", row.lhs},
                          {"rhs", row.rhs},
                          {"rel_err", row.rel_err},
                          {"pass", row.pass}});
    }
    return {{"suite", report.suite},
            {"pass", report.pass},
            {"tol", report.tol},
            {"max_rel_err", report.max_rel_err},
            {"checks", checks}};
}

nlohmann::json reports_to_json(const std::vector<VerifyReport>& reports) {
    if (reports.size() == 1) return report_to_json(reports.front());
    bool pass = true;
    nlohmann::json suites = nlohmann::json::array();
    for (const VerifyReport& report : reports) {
        pass = pass && report.pass;
        suites.push_back(report_to_json(report));
    }
    return {{"suite", "all"}, {"pass", pass}, {"suites", suites}};
}

std::string reports_to_csv(const std::vector<VerifyReport>& reports) {
    std::ostringstream os;
    os << "suite,check,lhs,rhs,rel_err,pass\n";
    for (const VerifyReport& report : reports)
        for (const CheckRow& row : report.checks)
            os << report.suite << "," << row.name << "," << round_trip_decimal(row.lhs)
               << "," << round_trip_decimal(row.rhs) << ","
               << round_trip_decimal(row.rel_err) << "," << (row.pass ? 1 : 0) << "\n";
    return os.str();
}

std::string report_summary_line(const VerifyReport& report) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "[%s] %-10s max rel err %.3e (tol %.0e, %zu checks)",
                  report.pass ? "PASS" : "FAIL", report.suite.c_str(),
                  report.max_rel_err, report.tol, report.checks.size());
    return buf;
}

}  // namespace hypercs
