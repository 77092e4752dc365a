#pragma once

#include <string>
#include <vector>

namespace mhc {

/// One named identity check over a degree window.
struct CheckResult {
    std::string name;
    std::string window;  // e.g. "r <= 5"
    bool pass = false;
    std::string detail;  // first failing degree or a short summary
};

inline bool all_pass(const std::vector<CheckResult>& cs) {
    for (const auto& c : cs)
        if (!c.pass) return false;
    return true;
}

}  // namespace mhc
