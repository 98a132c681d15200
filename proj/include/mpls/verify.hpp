#pragma once

#include "mpls/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mpls::verify {

struct Options {
    int n = 0;                   // 0: every rank the suite covers
    std::optional<Place> place;  // unset: every place the suite covers
    long trials = 0;             // 0: suite default
    std::uint64_t seed = 1;
};

struct Check {
    std::string name;
    long cases = 0;
    long failures = 0;
    double max_error = 0.0;  // numeric checks only
    double tolerance = 0.0;  // 0 for exact checks
    std::string first_failure;
    bool passed() const { return failures == 0 && cases > 0; }
};

struct Report {
    std::string suite;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool passed() const;
};

struct SuiteInfo {
    std::string name;
    int criterion;
    std::string title;
};

const std::vector<SuiteInfo>& suites();

// Throws DomainError for an unknown suite name or options outside the suite's scope.
Report run(const std::string& name, const Options& options);

}  // namespace mpls::verify
