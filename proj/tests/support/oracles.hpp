// Independent oracles for the property suites: plain, slow implementations
// kept deliberately separate from the library's own code paths.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "molr/core.hpp"

namespace molr::testing {

// O(k n^2) row/column scan over a raw grid.
bool scan_valid_rectangle(const std::vector<std::vector<int>> &grid);

// Set-based distinct-pairs check.
bool pairs_distinct(const LatinRectangle &a, const LatinRectangle &b);

// Loops over all (rect_perm, row_perm, col_perm); symbol permutations are
// read off cell-wise and checked for consistency.
std::uint64_t brute_force_aut_order(const MolrSet &m);

// Counts the t-MOLR with identity first rows by naive row-by-row recursion
// over whole permutations (no bitmask machinery).
std::uint64_t count_identity_first_row_molr(int n, int t, int k);

Isotopism random_isotopism(std::mt19937 &rng, int t, int k, int n);

MolrSet make_molr(const std::vector<std::vector<std::vector<int>>> &rects);

}  // namespace molr::testing
