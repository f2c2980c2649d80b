#include <doctest.h>

#include <random>
#include <set>

#include "molr/enumerate.hpp"
#include "molr/fixtures.hpp"
#include "molr/galois.hpp"
#include "molr/symmetry.hpp"
#include "support/oracles.hpp"

using namespace molr;
using molr::testing::make_molr;

TEST_CASE("canonical key is invariant under random isotopisms") {
    std::mt19937 rng(41);
    const MolrSet g5 = galois_mols(5);
    const std::string key = canonical_form(g5).canonical_key;
    for (int trial = 0; trial < 300; ++trial) {
        Isotopism iso = molr::testing::random_isotopism(rng, g5.t(), g5.k(), g5.n());
        CHECK(canonical_form(apply(iso, g5)).canonical_key == key);
    }
}

TEST_CASE("the three 2x4 2-MOLR classes have distinct keys") {
    auto seeds = seed_classes(4, 2);
    REQUIRE(seeds.classes.size() == 3);
    std::set<std::string> keys;
    for (const auto &rec : seeds.classes) keys.insert(rec.canonical_key);
    CHECK(keys.size() == 3);
}

TEST_CASE("canonical representative is normalized, minimal and in-class") {
    std::mt19937 rng(17);
    const MolrSet g4 = galois_mols(4);
    ClassRecord rec = canonical_form(g4);
    CHECK(is_normalized(rec.representative));
    CHECK(canonical_form(rec.representative).canonical_key == rec.canonical_key);
    // no random isotope beats it in stream order
    for (int trial = 0; trial < 100; ++trial) {
        Isotopism iso = molr::testing::random_isotopism(rng, g4.t(), g4.k(), g4.n());
        MolrSet image = apply(iso, g4);
        if (is_normalized(image))
            CHECK(molr_stream_key(rec.representative) <= molr_stream_key(image));
    }
}

TEST_CASE("aut orders match the brute-force oracle on every n<=4 class") {
    for (int t = 1; t <= 3; ++t) {
        ColumnRun run = run_column(4, t, 4, RegularityFilter::none, {});
        for (int k = 2; k <= 4; ++k) {
            auto frontier = run_column(4, t, k, RegularityFilter::none, {}).final_frontier;
            for (const auto &rec : frontier.classes)
                CHECK(rec.aut_order == molr::testing::brute_force_aut_order(rec.representative));
        }
    }
}

TEST_CASE("known autotopism orders") {
    auto run = run_column(4, 2, 4, RegularityFilter::none, {});
    REQUIRE(run.final_frontier.classes.size() == 1);
    CHECK(run.final_frontier.classes[0].aut_order == 96);
    CHECK(canonical_form(galois_mols(4)).aut_order == 288);
}

TEST_CASE("k=1 closed form") {
    MolrSet m = make_molr({{{1, 2, 0}}, {{2, 0, 1}}});
    ClassRecord rec = canonical_form(m, {.harvest_generators = true});
    CHECK(rec.aut_order == 2 * 6);   // t! * n!
    CHECK(rec.rect_orbits.size() == 1);
    CHECK(molr::testing::brute_force_aut_order(rec.representative) == rec.aut_order);
}

TEST_CASE("paratopism keys collapse the 2x4 2-MOLR classes to two") {
    auto seeds = seed_classes(4, 2);
    std::set<std::string> keys;
    for (const auto &rec : seeds.classes) keys.insert(paratopism_key(rec.representative));
    CHECK(keys.size() == 2);
}

TEST_CASE("paratopism key is invariant under isotopisms and conjugation") {
    std::mt19937 rng(5);
    const MolrSet g4 = galois_mols(4);
    const std::string key = paratopism_key(g4);
    for (int trial = 0; trial < 30; ++trial) {
        Isotopism iso = molr::testing::random_isotopism(rng, g4.t(), g4.k(), g4.n());
        CHECK(paratopism_key(apply(iso, g4)) == key);
    }
    for (int c = 0; c < g4.t(); ++c) CHECK(paratopism_key(conjugate_swap(g4, c)) == key);
}

TEST_CASE("homogeneity") {
    CHECK(is_homogeneous(make_molr({{{0, 1, 2}, {1, 2, 0}}})));  // t = 1
    CHECK(is_homogeneous(galois_mols(5)));
    // a 2-MOLR gluing a 4-cycle second row with a 2+2 second row is not
    MolrSet mixed = make_molr({{{0, 1, 2, 3}, {1, 2, 3, 0}}, {{0, 1, 2, 3}, {2, 3, 0, 1}}});
    CHECK_FALSE(is_homogeneous(mixed));
}

TEST_CASE("transitivity flag follows the rectangle orbits") {
    ClassRecord galois7 = canonical_form(galois_mols(7));
    CHECK(galois7.aut_order == 1764);
    CHECK(is_transitive(galois7));
    ClassRecord single = canonical_form(make_molr({{{0, 1, 2}, {1, 2, 0}}}));
    CHECK(is_transitive(single));
}

TEST_CASE("rect_orbit_of extracts transitive sub-MOLS from the Galois set") {
    ClassRecord rec = canonical_form(galois_mols(7), {.harvest_generators = true});
    auto elements = aut_group_elements(rec);
    CHECK(elements.size() == rec.aut_order);

    bool found2 = false, found3 = false;
    for (const Isotopism &g : elements) {
        // order of the rectangle action
        int order = 1;
        Perm p = g.rect_perm;
        while (!std::equal(p.begin(), p.end(), identity_perm(p.size()).begin())) {
            p = compose_perm(g.rect_perm, p);
            ++order;
            REQUIRE(order <= 64);
        }
        if (order != 2 && order != 3) continue;
        MolrSet orbit = rect_orbit_of(rec, g, 0);
        if (static_cast<int>(orbit.t()) != order) continue;
        ClassRecord orec = canonical_form(orbit);
        CHECK(is_transitive(orec));
        if (order == 2) found2 = true;
        if (order == 3) found3 = true;
        if (found2 && found3) break;
    }
    CHECK(found2);
    CHECK(found3);

    // identity orbit is the single starting rectangle
    Isotopism id = Isotopism::identity(rec.representative.t(), rec.representative.k(),
                                       rec.representative.n());
    CHECK(rect_orbit_of(rec, id, 2).t() == 1);

    Isotopism bogus = id;
    std::swap(bogus.col_perm[0], bogus.col_perm[1]);
    CHECK_THROWS_AS(rect_orbit_of(rec, bogus, 0), NotAnAutotopism);
}

TEST_CASE("is_orbit_of") {
    ClassRecord rec = canonical_form(galois_mols(7), {.harvest_generators = true});
    // find an order-2 orbit pair and test membership
    for (const Isotopism &g : aut_group_elements(rec)) {
        Perm sq = compose_perm(g.rect_perm, g.rect_perm);
        if (g.rect_perm != identity_perm(6) && sq == identity_perm(6) &&
            g.rect_perm[0] != 0) {
            MolrSet orbit = rect_orbit_of(rec, g, 0);
            CHECK(is_orbit_of(orbit, rec.representative));
            break;
        }
    }
    // a single rectangle is always an orbit (identity element)
    MolrSet one = validate_molr({rec.representative.rect(0)});
    CHECK(is_orbit_of(one, rec.representative));
}

TEST_CASE("is_orbit_of rejects unrelated sets") {
    // 2x4 3-MOLR whose aut group has no orbit isotopic to this unrelated pair
    auto seeds3 = seed_classes(4, 3);
    REQUIRE(seeds3.classes.size() == 2);
    MolrSet mixed = make_molr({{{0, 1, 2, 3}, {1, 2, 3, 0}}, {{0, 1, 2, 3}, {2, 3, 0, 1}}});
    bool any = false;
    for (const auto &rec : seeds3.classes)
        if (is_orbit_of(mixed, rec.representative)) any = true;
    CHECK_FALSE(any);
}

TEST_CASE("generation form is a normalized member of the class") {
    std::mt19937 rng(11);
    const MolrSet g5 = galois_mols(5);
    const std::string key = canonical_form(g5).canonical_key;
    for (int trial = 0; trial < 20; ++trial) {
        Isotopism iso = molr::testing::random_isotopism(rng, g5.t(), g5.k(), g5.n());
        MolrSet form = generation_form(apply(iso, g5));
        CHECK(is_normalized(form));
        CHECK(canonical_form(form).canonical_key == key);
    }
}

TEST_CASE("fixture aut orders: order-9 6-MOLS and order-8 3-MOLS") {
    ClassRecord six = canonical_form(fixtures::six_mols_order9());
    CHECK(six.aut_order == 432);
    CHECK(is_transitive(six));
    ClassRecord g3 = canonical_form(fixtures::three_mols_order8());
    CHECK(g3.aut_order == 48);
}
