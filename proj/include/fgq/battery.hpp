#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fgq {

/// Options for the verification battery: exhaustive corpora up to max_order
/// (5 at most; order 5 is sampled when sample > 0, exhaustive when 0), plus
/// seeded linear draws from the group catalog.
struct BatteryOptions {
    int max_order = 4;
    std::uint64_t sample = 0;
    std::uint64_t seed = 1;
    int draws = 120;
};

struct BatteryLine {
    std::string name;
    bool pass = false;
    std::uint64_t instances = 0;
    std::string detail;  // first failure description, empty when passing
};

/// Runs every check in a fixed order and returns one line per check.
std::vector<BatteryLine> run_battery(const BatteryOptions& opt);

}  // namespace fgq
