#include "triop/report.hpp"

namespace triop {

std::string CheckReport::summary(std::size_t max_items) const {
    if (violations.empty()) return "ok";
    std::string out = std::to_string(violations.size()) + " violation(s)";
    std::size_t shown = 0;
    for (const auto& v : violations) {
        if (shown++ == max_items) {
            out += "; ...";
            break;
        }
        std::string where;
        for (int i : v.where) where += (where.empty() ? "" : ",") + std::to_string(i);
        out += "; " + v.what + "@(" + where + "): " + v.residual;
    }
    return out;
}

}  // namespace triop
