#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spincheck {

// Outcome of one verification suite.  Exact (symbolic) checks report no
// residual value and pass only on exact zero; numeric checks report the
// largest absolute coefficient deviation seen.
struct CheckReport {
    std::string check;
    bool pass = false;
    std::optional<double> max_abs_residual;           // nullopt = exact-zero
    std::vector<std::pair<std::string, std::string>> params;
    double elapsed_ms = 0.0;

    void param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    void param(const std::string& key, long long value) {
        params.emplace_back(key, std::to_string(value));
    }
};

std::string report_to_json(const std::vector<CheckReport>& reports);
std::string report_to_text(const std::vector<CheckReport>& reports);

} // namespace spincheck
