#include <doctest.h>

#include "molr/galois.hpp"
#include "molr/symmetry.hpp"

using namespace molr;

namespace {

// Exhaustive field-axiom oracle.
void check_field_axioms(const FieldTable &f) {
    const int n = f.order;
    for (int a = 0; a < n; ++a) {
        CHECK(f.add_of(a, 0) == a);
        CHECK(f.mul_of(a, 1) == a);
        CHECK(f.mul_of(a, 0) == 0);
        bool has_neg = false, has_inv = (a == 0);
        for (int b = 0; b < n; ++b) {
            if (f.add_of(a, b) == 0) has_neg = true;
            if (a != 0 && f.mul_of(a, b) == 1) has_inv = true;
            CHECK(f.add_of(a, b) == f.add_of(b, a));
            CHECK(f.mul_of(a, b) == f.mul_of(b, a));
        }
        CHECK(has_neg);
        CHECK(has_inv);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                CHECK(f.add_of(f.add_of(a, b), c) == f.add_of(a, f.add_of(b, c)));
                CHECK(f.mul_of(f.mul_of(a, b), c) == f.mul_of(a, f.mul_of(b, c)));
                CHECK(f.mul_of(a, f.add_of(b, c)) == f.add_of(f.mul_of(a, b), f.mul_of(a, c)));
            }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for every supported order") {
    for (int n : {2, 3, 4, 5, 7, 8, 9}) check_field_axioms(field(n));
    CHECK_THROWS_AS(field(6), NotAPrimePower);
    CHECK_THROWS_AS(field(10), NotAPrimePower);
}

TEST_CASE("generator and powers") {
    FieldTable f5 = field(5);
    CHECK(f5.generator == 2);
    FieldTable f4 = field(4);
    for (int a = 0; a < 4; ++a) CHECK(f4.add_of(a, a) == 0);  // characteristic 2
    for (int n : {2, 3, 4, 5, 7, 8, 9}) {
        FieldTable f = field(n);
        CHECK(is_permutation(f.powers, n));
        CHECK(f.powers[0] == 0);
        if (n > 2) CHECK(f.powers[1] == 1);
        // generator has full multiplicative order
        int e = f.generator, order = 1;
        while (e != 1) {
            e = f.mul_of(e, f.generator);
            ++order;
        }
        CHECK(order == n - 1);
    }
}

TEST_CASE("galois_mols validates for every supported order") {
    for (int n : {3, 4, 5, 7, 8, 9}) {
        MolrSet m = galois_mols(n);
        CHECK(m.t() == n - 1);
        CHECK(m.k() == n);
        CHECK_NOTHROW(validate_molr(m.rects()));
    }
    CHECK_THROWS_AS(galois_mols(2), NTooSmall);
    CHECK_THROWS_AS(galois_mols(6), NotAPrimePower);
}

TEST_CASE("the cyclic autotopism stabilizes the set with the right orbits") {
    for (int n : {3, 4, 5, 7, 8, 9}) {
        MolrSet m = galois_mols(n);
        Isotopism g = galois_cyclic_autotopism(n);
        CHECK(apply(g, m) == m);
        // single orbit on squares
        int order = 1;
        Perm p = g.rect_perm;
        while (p != identity_perm(n - 1)) {
            p = compose_perm(g.rect_perm, p);
            ++order;
        }
        CHECK(order == n - 1);
        // fixes column 0, single orbit on the rest
        CHECK(g.col_perm[0] == 0);
        int len = 1, c = g.col_perm[1];
        while (c != 1) {
            c = g.col_perm[c];
            ++len;
        }
        CHECK(len == n - 1);
        CHECK(g.row_perm == identity_perm(n));
    }
}

TEST_CASE("stepwise truncation chains are transitive at every level") {
    for (int n : {3, 4, 5, 7}) {
        MolrSet m = galois_mols(n);
        auto chain = stepwise_truncation(m);
        CHECK(static_cast<int>(chain.size()) == n - 1);
        int expect_k = n;
        for (const MolrSet &member : chain) {
            CHECK(member.k() == expect_k--);
            CHECK_NOTHROW(validate_molr(member.rects()));
            if (member.k() <= 5) {
                ClassRecord rec = canonical_form(member);
                CHECK(is_transitive(rec));
            }
        }
    }
}

TEST_CASE("stated autotopism orders of the field constructions") {
    CHECK(canonical_form(galois_mols(4)).aut_order == 288);
    CHECK(canonical_form(galois_mols(5)).aut_order == 400);
    CHECK(canonical_form(galois_mols(7)).aut_order == 1764);
}

TEST_CASE("truncation rejects a non-galois input") {
    MolrSet m = galois_mols(4);
    // relabel the symbols of one square only: still a valid 3-MOLS but the
    // cyclic map no longer stabilizes it in this labeling
    Isotopism g = Isotopism::identity(m.t(), m.k(), m.n());
    std::swap(g.sym_perms[0][0], g.sym_perms[0][1]);
    MolrSet shuffled = apply(g, m);
    CHECK_THROWS_AS(stepwise_truncation(shuffled), NotGaloisConstruction);
}
