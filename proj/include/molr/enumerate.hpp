// enumerate.hpp -- row-by-row generation of isotopism classes with
// class-level deduplication, stepwise-flag tracking and table aggregation.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "molr/core.hpp"
#include "molr/symmetry.hpp"

namespace molr {

enum class RegularityFilter { none, stepwise_homogeneous, stepwise_transitive };

struct BudgetExceeded : Error {
    int level;
    std::uint64_t classes;
    BudgetExceeded(int lvl, std::uint64_t cls)
        : Error("class budget exceeded at level k=" + std::to_string(lvl) + " with " +
                std::to_string(cls) + " classes"),
          level(lvl), classes(cls) {}
};

// All classes of one (n, k, t) level.  canonical_key values are pairwise
// distinct and the records are sorted by key, so listings are deterministic.
struct ExtensionFrontier {
    int n = 0;
    int k = 0;
    int t = 0;
    RegularityFilter filter = RegularityFilter::none;
    std::vector<ClassRecord> classes;
};

struct EnumerateOptions {
    int workers = 1;
    std::uint64_t budget = 5'000'000;   // classes per level
};

// Enumerates every way of appending one new row to each rectangle of a
// parent set: rows stay permutations, columns never repeat a symbol, and no
// ordered symbol pair repeats in any rectangle pair.  Rows are built by
// constrained backtracking, most-constrained column first.
void for_each_extension(const MolrSet &parent,
                        const std::function<void(const std::vector<Perm> &)> &emit);

// The single class of 1 x n t-MOLR.
ExtensionFrontier trivial_frontier(int n, int t);

// All isotopism classes of 2 x n t-MOLR: identity first rows, second rows
// pairwise discordant derangements in decreasing order, deduplicated by
// canonical key.  Classification (including k=2 stepwise flags) is filled.
ExtensionFrontier seed_classes(int n, int t, const EnumerateOptions &opts = {});

// One extension level with global dedup and stepwise propagation; classes
// failing a requested filter are dropped before the result is returned.
ExtensionFrontier extend_frontier(const ExtensionFrontier &f, RegularityFilter filter,
                                  const EnumerateOptions &opts = {});

// Fills the homogeneous/transitive flags on every record (stepwise flags are
// maintained by seeding/extension and left untouched).
void classify_frontier(ExtensionFrontier &f, int workers = 1);

struct PopulationStats {
    std::uint64_t total = 0;
    std::map<std::uint64_t, std::uint64_t> aut_histogram;
};

// One CountTable slice: class counts and autotopism-order histograms for the
// five populations of a single (n, t, k) cell, plus the paratopism count.
struct CellCounts {
    int n = 0, t = 0, k = 0;
    PopulationStats all, homogeneous, transitive, stepwise_homogeneous, stepwise_transitive;
    std::uint64_t paratopism_classes = 0;
};

struct CountTable {
    int n = 0, t = 0;
    std::vector<CellCounts> per_k;   // ascending k, starting at the seed level
};

CellCounts tabulate_frontier(const ExtensionFrontier &f, bool with_paratopism, int workers = 1);

struct ColumnRun {
    CountTable table;
    ExtensionFrontier final_frontier;
};

// Runs seed + extensions up to k_max, tabulating every level; on_level sees
// each completed frontier (the hook the CLI uses to stream levels to disk).
ColumnRun run_column(int n, int t, int k_max, RegularityFilter filter,
                     const EnumerateOptions &opts = {}, bool with_paratopism = false,
                     const std::function<void(const ExtensionFrontier &)> &on_level = {});

CellCounts enumerate_cell(int n, int t, int k, RegularityFilter filter,
                          const EnumerateOptions &opts = {}, bool with_paratopism = false);

}  // namespace molr
