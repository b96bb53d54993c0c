#pragma once

#include <string>
#include <vector>

namespace triop {

// One violated identity instance: which basis tuple, which identity, and the
// nonzero residual (rendered canonically so reports are printable and
// deterministic).
struct Violation {
    std::vector<int> where;  // 1-based basis indices
    std::string what;        // identity label, e.g. "fundamental-identity"
    std::string residual;
};

struct CheckReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    bool pass() const { return violations.empty(); }
    void add(std::vector<int> where, std::string what, std::string residual) {
        violations.push_back({std::move(where), std::move(what), std::move(residual)});
    }
    void merge(const CheckReport& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
        warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
    }
    std::string summary(std::size_t max_items = 4) const;
};

}  // namespace triop
