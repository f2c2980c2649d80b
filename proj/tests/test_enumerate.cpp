#include <doctest.h>

#include <set>

#include "molr/enumerate.hpp"
#include "support/oracles.hpp"

using namespace molr;

TEST_CASE("seed counts match the small tables") {
    CHECK(seed_classes(4, 2).classes.size() == 3);
    CHECK(seed_classes(4, 3).classes.size() == 2);
    CHECK(seed_classes(5, 2).classes.size() == 5);
    CHECK(seed_classes(6, 5, {.workers = 2}).classes.size() == 33);
}

TEST_CASE("no three pairwise-compatible derangements of three points exist") {
    // independent oracle: brute-force derangement triples
    std::vector<std::vector<int>> der;
    std::vector<int> p{0, 1, 2};
    do {
        bool fixes = false;
        for (int i = 0; i < 3; ++i)
            if (p[i] == i) fixes = true;
        if (!fixes) der.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    REQUIRE(der.size() == 2);
    int triples = 0;
    for (size_t a = 0; a < der.size(); ++a)
        for (size_t b = a + 1; b < der.size(); ++b)
            for (size_t c = b + 1; c < der.size(); ++c) ++triples;
    CHECK(triples == 0);
    CHECK(seed_classes(3, 3).classes.empty());
}

TEST_CASE("extension level counts for n=4") {
    auto seeds = seed_classes(4, 2);
    auto k3 = extend_frontier(seeds, RegularityFilter::none);
    CHECK(k3.classes.size() == 2);
    auto k4 = extend_frontier(k3, RegularityFilter::none);
    CHECK(k4.classes.size() == 1);
    CHECK_THROWS_AS(extend_frontier(k4, RegularityFilter::none), BadDimensions);
}

TEST_CASE("enumerate_cell reproduces stated cells") {
    CellCounts c1 = enumerate_cell(5, 4, 5, RegularityFilter::none, {});
    CHECK(c1.all.total == 1);
    CHECK(c1.all.aut_histogram.at(400) == 1);

    CellCounts c2 = enumerate_cell(6, 4, 5, RegularityFilter::none, {.workers = 2});
    CHECK(c2.all.total == 8);
    std::map<std::uint64_t, std::uint64_t> expected{{6, 1}, {9, 2}, {18, 1},
                                                    {24, 1}, {36, 1}, {72, 2}};
    CHECK(c2.all.aut_histogram == expected);
}

TEST_CASE("classification flags on stated cells") {
    // 3x5 t=3: one class, homogeneous but not transitive
    auto run = run_column(5, 3, 3, RegularityFilter::none, {});
    REQUIRE(run.final_frontier.classes.size() == 1);
    CHECK(run.final_frontier.classes[0].flags.homogeneous);
    CHECK_FALSE(run.final_frontier.classes[0].flags.transitive);

    // t=1 frontiers are entirely homogeneous and transitive
    auto single = run_column(4, 1, 3, RegularityFilter::none, {});
    for (const auto &rec : single.final_frontier.classes) {
        CHECK(rec.flags.homogeneous);
        CHECK(rec.flags.transitive);
    }
}

TEST_CASE("level-by-level confluence: seed at two vs extend from one") {
    for (int n : {4, 5}) {
        for (int t : {1, 2}) {
            auto direct = seed_classes(n, t);
            auto via_trivial = extend_frontier(trivial_frontier(n, t), RegularityFilter::none);
            REQUIRE(direct.classes.size() == via_trivial.classes.size());
            for (size_t i = 0; i < direct.classes.size(); ++i)
                CHECK(direct.classes[i].canonical_key == via_trivial.classes[i].canonical_key);
        }
    }
}

TEST_CASE("filters drop non-qualifying classes and stay complete") {
    auto all = run_column(6, 3, 4, RegularityFilter::none, {.workers = 2});
    auto filtered = run_column(6, 3, 4, RegularityFilter::stepwise_homogeneous, {.workers = 2});
    std::set<std::string> expected;
    for (const auto &rec : all.final_frontier.classes)
        if (rec.flags.stepwise_homogeneous) expected.insert(rec.canonical_key);
    std::set<std::string> got;
    for (const auto &rec : filtered.final_frontier.classes) {
        CHECK(rec.flags.stepwise_homogeneous);
        got.insert(rec.canonical_key);
    }
    CHECK(got == expected);
}

TEST_CASE("stepwise flags imply their plain counterparts") {
    auto run = run_column(6, 2, 4, RegularityFilter::none, {.workers = 2});
    for (const auto &cell : run.table.per_k) {
        CHECK(cell.stepwise_homogeneous.total <= cell.homogeneous.total);
        CHECK(cell.stepwise_transitive.total <= cell.transitive.total);
        CHECK(cell.transitive.total <= cell.homogeneous.total);
    }
    for (const auto &rec : run.final_frontier.classes) {
        if (rec.flags.transitive) CHECK(rec.flags.homogeneous);
        if (rec.flags.stepwise_homogeneous) CHECK(rec.flags.homogeneous);
        if (rec.flags.stepwise_transitive) CHECK(rec.flags.transitive);
    }
}

TEST_CASE("budget cap aborts with diagnostics") {
    try {
        enumerate_cell(6, 2, 3, RegularityFilter::none, {.workers = 1, .budget = 100});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded &e) {
        CHECK(e.level == 3);
        CHECK(e.classes >= 100);
    }
}

TEST_CASE("worker count does not change the result") {
    auto one = run_column(5, 2, 4, RegularityFilter::none, {.workers = 1});
    auto four = run_column(5, 2, 4, RegularityFilter::none, {.workers = 4});
    REQUIRE(one.final_frontier.classes.size() == four.final_frontier.classes.size());
    for (size_t i = 0; i < one.final_frontier.classes.size(); ++i) {
        CHECK(one.final_frontier.classes[i].canonical_key ==
              four.final_frontier.classes[i].canonical_key);
        CHECK(one.final_frontier.classes[i].aut_order ==
              four.final_frontier.classes[i].aut_order);
    }
}

TEST_CASE("orbit counting: class sizes sum to the labeled count") {
    // sum over classes of t!k!n!/aut = number of identity-first-row t-MOLR
    for (auto [n, t, k] : {std::tuple{4, 2, 3}, {4, 3, 4}, {5, 2, 3}, {5, 3, 3}}) {
        auto run = run_column(n, t, k, RegularityFilter::none, {.workers = 2});
        long double sum = 0;
        std::uint64_t group = 1;
        for (int i = 2; i <= t; ++i) group *= i;
        for (int i = 2; i <= k; ++i) group *= i;
        for (int i = 2; i <= n; ++i) group *= i;
        for (const auto &rec : run.final_frontier.classes)
            sum += static_cast<long double>(group) / rec.aut_order;
        const std::uint64_t direct = molr::testing::count_identity_first_row_molr(n, t, k);
        CHECK(static_cast<std::uint64_t>(sum + 0.5L) == direct);
    }
}
