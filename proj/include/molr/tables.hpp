// tables.hpp -- expected counts and autotopism-order distributions,
// embedded so the verify command runs offline.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace molr::tables {

struct HistEntry {
    std::uint64_t aut_order;
    std::uint64_t count;
};

struct PopulationRow {
    bool present = false;   // absent rows mean an all-zero population
    std::uint64_t total = 0;
    std::vector<HistEntry> histogram;
};

// The five populations of one (n, t, k) cell with their histograms.
struct ExpectedCell {
    std::string caption;
    int n = 0, t = 0, k = 0;
    PopulationRow all, homogeneous, transitive, stepwise_homogeneous, stepwise_transitive;
};

// One cell of a plain count table.
struct ExpectedCount {
    std::string caption;
    int n = 0, t = 0, k = 0;
    std::uint64_t count = 0;
};

const std::vector<ExpectedCell> &expected_cells();
const std::vector<ExpectedCount> &expected_non_isotopic();
const std::vector<ExpectedCount> &expected_paratopism();

}  // namespace molr::tables
