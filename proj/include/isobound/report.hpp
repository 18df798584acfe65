#pragma once

#include <string>
#include <vector>

namespace isobound {

// One certified (or failed) inequality in a verification batch.
struct InequalityItem {
    std::string label;
    bool certified = false;
    int bits_used = 0;
};

struct InequalityReport {
    std::vector<InequalityItem> items;
    bool all_certified = false;
};

}  // namespace isobound
