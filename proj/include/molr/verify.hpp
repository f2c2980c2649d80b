// verify.hpp -- recompute-and-diff suites against the embedded tables.

#pragma once

#include <string>
#include <vector>

#include "molr/enumerate.hpp"

namespace molr {

struct VerifyIssue {
    std::string where;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> lines;
    std::vector<VerifyIssue> issues;
};

// Suites: n4, n5, n6, n7-selected, galois, fixtures.
VerifyReport verify_suite(const std::string &suite, const EnumerateOptions &opts);

std::vector<std::string> verify_suite_names();

}  // namespace molr
