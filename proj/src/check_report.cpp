#include "spincheck/check_report.hpp"

#include <sstream>

#include "json.hpp"

namespace spincheck {

std::string report_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["check"] = r.check;
        obj["status"] = r.pass ? "pass" : "fail";
        if (r.max_abs_residual)
            obj["max_abs_residual"] = *r.max_abs_residual;
        else
            obj["max_abs_residual"] = "exact-zero";
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        obj["params"] = params;
        obj["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

std::string report_to_text(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.check;
        if (r.max_abs_residual)
            os << "  residual=" << *r.max_abs_residual;
        else
            os << "  residual=exact-zero";
        for (const auto& [k, v] : r.params) os << "  " << k << "=" << v;
        os << "  (" << r.elapsed_ms << " ms)\n";
    }
    return os.str();
}

} // namespace spincheck
