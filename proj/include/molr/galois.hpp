// galois.hpp -- finite-field tables for small prime powers and the classical
// MOLS construction with its stepwise-transitive truncation chain.

#pragma once

#include "molr/core.hpp"

namespace molr {

struct NotAPrimePower : Error {
    explicit NotAPrimePower(int n)
        : Error("no field of order " + std::to_string(n) + " is supported") {}
};

struct NTooSmall : Error {
    explicit NTooSmall(int n) : Error("order " + std::to_string(n) + " is too small") {}
};

struct NotGaloisConstruction : Error {
    NotGaloisConstruction() : Error("the cyclic autotopism does not stabilize the set") {}
};

// Addition/multiplication tables of GF(n).  Elements are encoded as their
// polynomial coefficient vectors read as base-p integers, so 0 and 1 are the
// field's own 0 and 1.
struct FieldTable {
    int order = 0;
    std::vector<Symbol> add;   // order x order, row-major
    std::vector<Symbol> mul;
    Symbol generator = 0;      // least element of multiplicative order n-1
    Perm powers;               // a_0 = 0, a_1 = 1, a_i = generator^(i-1)

    Symbol add_of(int a, int b) const { return add[a * order + b]; }
    Symbol mul_of(int a, int b) const { return mul[a * order + b]; }
};

// Supported orders: 2, 3, 4, 5, 7, 8, 9.  Throws NotAPrimePower otherwise.
FieldTable field(int n);

// The (n-1)-MOLS whose square with coefficient a_k holds a_i + a_k*a_j at
// position (i, j), rows and columns indexed along the powers sequence.
MolrSet galois_mols(int n);

// The autotopism of galois_mols(n) that rotates the non-zero columns one
// step along the powers sequence while cycling the squares; it fixes the
// rows pointwise, acts with a single orbit on the squares and a single orbit
// on the non-fixed columns.
Isotopism galois_cyclic_autotopism(int n);

// Row-prefix chain k = n, n-1, ..., 2 of the input MOLS.  Every member is
// stabilized by the restricted cyclic autotopism, which cycles all squares,
// so every member is transitive and the chain witnesses stepwise
// transitivity.  Throws NotGaloisConstruction when the autotopism check
// fails.
std::vector<MolrSet> stepwise_truncation(const MolrSet &m);

}  // namespace molr
