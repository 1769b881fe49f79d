#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "qv/invariants.hpp"

namespace qv {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

json point_to_json(const QuiverPoint& p);
// Rejects unknown versions and shape mismatches. Genericity is not re-checked.
QuiverPoint point_from_json(const json& j);

void write_point(const std::string& path, const QuiverPoint& p);
QuiverPoint read_point(const std::string& path);

json invariants_to_json(const InvariantVector& v);

struct SuiteReport {
    std::string suite;
    int trials = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::map<std::string, double> details;  // named sub-deviations
    std::vector<std::string> notes;
};

json report_to_json(const SuiteReport& r);
json reports_to_json(const std::vector<SuiteReport>& rs);

// Comma-separated complex literals: "1.5", "2-0.5j", "0.3+1e-2j", "j".
std::vector<cplx> parse_complex_list(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace qv
