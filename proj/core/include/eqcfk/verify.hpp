#pragma once

#include "eqcfk/models.hpp"

#include <map>
#include <string>
#include <vector>

namespace eqcfk {

struct CheckResult {
    int criterion = 0;
    std::string group;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    // criterion -> all of its checks passed
    std::map<int, bool> per_criterion() const;
};

struct CriterionInfo {
    int number;
    std::string group;
    std::string title;
};

const std::vector<CriterionInfo>& criteria();

// only: group names to run, empty for all
VerifyReport run_verify(const KnotLibrary& lib, const std::vector<std::string>& only = {}, int bound = 20);

}  // namespace eqcfk
