#include <doctest.h>

#include <random>

#include "molr/core.hpp"
#include "molr/galois.hpp"
#include "molr/symmetry.hpp"
#include "support/oracles.hpp"

using namespace molr;
using molr::testing::make_molr;

TEST_CASE("validate_rectangle accepts the stated examples") {
    CHECK_NOTHROW(validate_rectangle({{0, 1, 2}}));
    CHECK_NOTHROW(validate_rectangle({{0, 1, 2, 3}, {3, 2, 0, 1}, {1, 0, 3, 2}}));
}

TEST_CASE("validate_rectangle rejects a column repeat with indices") {
    try {
        validate_rectangle({{0, 1, 2}, {0, 2, 1}});
        FAIL("expected ColumnRepeat");
    } catch (const ColumnRepeat &e) {
        CHECK(e.column == 0);
        CHECK(e.symbol == 0);
    }
}

TEST_CASE("validate_rectangle rejects bad shapes and rows") {
    CHECK_THROWS_AS(validate_rectangle({{0, 1}, {1, 0}, {0, 1}}), BadDimensions);  // k > n
    CHECK_THROWS_AS(validate_rectangle({{0, 0, 1}}), RowNotPermutation);
    CHECK_THROWS_AS(validate_rectangle({{0, 1, 3}}), RowNotPermutation);
}

TEST_CASE("validate_rectangle agrees with the scan oracle on random grids") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 4000; ++trial) {
        const int n = 2 + rng() % 4;
        const int k = 1 + rng() % n;
        std::vector<std::vector<int>> grid(k, std::vector<int>(n));
        // mix of permutation rows and arbitrary rows to hit both outcomes
        for (auto &row : grid) {
            for (int j = 0; j < n; ++j) row[j] = j;
            std::shuffle(row.begin(), row.end(), rng);
            if (rng() % 3 == 0) row[rng() % n] = rng() % n;
        }
        bool accepted = true;
        try {
            validate_rectangle(grid);
        } catch (const Error &) {
            accepted = false;
        }
        CHECK(accepted == molr::testing::scan_valid_rectangle(grid));
    }
}

TEST_CASE("are_orthogonal matches the stated examples") {
    auto a = validate_rectangle({{0, 1, 2, 3}, {1, 0, 3, 2}});
    auto b = validate_rectangle({{0, 1, 2, 3}, {2, 3, 0, 1}});
    auto c = validate_rectangle({{0, 1, 2, 3}, {3, 2, 1, 0}});
    CHECK(are_orthogonal(a, b));
    CHECK(are_orthogonal(c, a));
    CHECK_FALSE(are_orthogonal(a, a));  // (s,s) repeats for k >= 2
    CHECK_THROWS_AS(are_orthogonal(a, validate_rectangle({{0, 1, 2}})), DimensionMismatch);
}

TEST_CASE("are_orthogonal is symmetric and matches the pair-set oracle") {
    std::mt19937 rng(99);
    const MolrSet g5 = galois_mols(5);
    for (int trial = 0; trial < 100; ++trial) {
        Isotopism iso = molr::testing::random_isotopism(rng, g5.t(), g5.k(), g5.n());
        MolrSet m = apply(iso, g5);
        for (int i = 0; i < m.t(); ++i)
            for (int j = 0; j < m.t(); ++j) {
                const bool fwd = are_orthogonal(m.rect(i), m.rect(j));
                CHECK(fwd == are_orthogonal(m.rect(j), m.rect(i)));
                CHECK(fwd == molr::testing::pairs_distinct(m.rect(i), m.rect(j)));
            }
    }
}

TEST_CASE("validate_molr") {
    auto r = validate_rectangle({{0, 1, 2, 3}, {1, 0, 3, 2}});
    CHECK(validate_molr({r}).t() == 1);
    CHECK_NOTHROW(validate_molr(galois_mols(4).rects()));
    try {
        validate_molr({r, r});
        FAIL("expected NotOrthogonal");
    } catch (const NotOrthogonal &e) {
        CHECK(e.first == 0);
        CHECK(e.second == 1);
    }
}

TEST_CASE("normalize fixed point, S2 reordering and 1xn relabeling") {
    MolrSet swapped = make_molr({{{0, 1, 2, 3}, {1, 0, 3, 2}}, {{0, 1, 2, 3}, {3, 2, 1, 0}}});
    NormalizedMolr norm = normalize(swapped);
    CHECK(is_normalized(norm.set));
    CHECK(norm.set.rect(0).row_perm(1) > norm.set.rect(1).row_perm(1));

    MolrSet already = norm.set;
    NormalizedMolr again = normalize(already);
    CHECK(again.set == already);
    CHECK(again.witness == Isotopism::identity(already.t(), already.k(), already.n()));

    MolrSet one_row = make_molr({{{2, 0, 1}}});
    CHECK(normalize(one_row).set == make_molr({{{0, 1, 2}}}));
}

TEST_CASE("normalize is idempotent and the witness maps input to output") {
    std::mt19937 rng(7);
    const MolrSet g4 = galois_mols(4);
    const MolrSet g5 = galois_mols(5);
    for (const MolrSet &base : {g4, g5}) {
        for (int trial = 0; trial < 100; ++trial) {
            Isotopism iso = molr::testing::random_isotopism(rng, base.t(), base.k(), base.n());
            MolrSet m = apply(iso, base);
            NormalizedMolr norm = normalize(m);
            CHECK(is_normalized(norm.set));
            CHECK(apply(norm.witness, m) == norm.set);
            CHECK(normalize(norm.set).set == norm.set);
        }
    }
}

TEST_CASE("k=1 sets normalize to identity rows") {
    MolrSet m = make_molr({{{3, 1, 0, 2}}, {{3, 1, 0, 2}}});
    MolrSet norm = normalize(m).set;
    for (int p = 0; p < norm.t(); ++p)
        for (int j = 0; j < norm.n(); ++j) CHECK(norm.at(p, 0, j) == j);
}

TEST_CASE("conjugate_swap is an involution producing valid sets") {
    std::mt19937 rng(21);
    const MolrSet g5 = galois_mols(5);
    for (int trial = 0; trial < 50; ++trial) {
        Isotopism iso = molr::testing::random_isotopism(rng, g5.t(), g5.k(), g5.n());
        MolrSet m = apply(iso, g5);
        for (int c = 0; c < m.t(); ++c) {
            MolrSet swapped = conjugate_swap(m, c);
            CHECK_NOTHROW(validate_molr(swapped.rects()));
            CHECK(conjugate_swap(swapped, c) == m);
        }
    }
    CHECK_THROWS_AS(conjugate_swap(g5, 4), IndexOutOfRange);
}

TEST_CASE("conjugate_swap fixes a square whose rows are involutions") {
    MolrSet m = make_molr({{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}});
    CHECK(conjugate_swap(m, 0) == m);
}

TEST_CASE("isotopism group laws") {
    std::mt19937 rng(3);
    const MolrSet base = galois_mols(5);
    const int t = base.t(), k = base.k(), n = base.n();
    for (int trial = 0; trial < 200; ++trial) {
        Isotopism g = molr::testing::random_isotopism(rng, t, k, n);
        Isotopism h = molr::testing::random_isotopism(rng, t, k, n);
        CHECK(apply(g, apply(h, base)) == apply(compose(g, h), base));
        CHECK(apply(compose(g, inverse(g)), base) == base);
        CHECK(apply(Isotopism::identity(t, k, n), base) == base);
    }
}
