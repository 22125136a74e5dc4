#pragma once

#include <string>
#include <vector>

#include "leaky/vertex_oracle.hpp"

namespace leaky {

struct SelfTestResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Quick invariant suite over the worked examples and small exhaustive
/// grids. Never throws; an exception inside a check marks it failed.
std::vector<SelfTestResult> run_selftest(const VertexOracle& oracle, int jobs = 1);

}  // namespace leaky
