#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exou::cli {

struct CliConfig {
    double tolerance = 1e-9;
    int enumeration_cap = 20;
    int lr_cap = 30;
    bool json = false;
    int precision = 6;
    bool sort_parts = false;
    int time_budget_ms = 300000;
    std::uint64_t seed = 0x5eed;
};

/// Exit codes: 0 success (or universal), 3 not universal, 2 rejected input,
/// 1 internal error or failed verification.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace exou::cli
