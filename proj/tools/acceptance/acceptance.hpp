#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdecomp::acceptance {

struct Options {
    int threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr int kCriteria = 10;

CriterionResult run_criterion(int id, const Options& options = {});

/// "PASS criterion 3 (title): detail [1.2s]"
std::string format_line(const CriterionResult& result);

/// Runs the given criteria (all when empty), printing one line each as it
/// finishes. Returns the number of failures.
int run_all(const std::vector<int>& ids, const Options& options, std::ostream& out);

}  // namespace hdecomp::acceptance
