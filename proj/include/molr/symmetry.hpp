// symmetry.hpp -- isotopism action, canonical forms, autotopism groups and
// the regularity classifiers.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "molr/core.hpp"

namespace molr {

struct NotAnAutotopism : Error {
    NotAnAutotopism() : Error("the given isotopism does not fix the representative") {}
};

// Applies g to m: the rectangle landing in output slot p is rectangle
// rect_perm^-1(p) of m with rows, columns and symbols permuted.
MolrSet apply(const Isotopism &g, const MolrSet &m);

struct RegularityFlags {
    bool homogeneous = false;
    bool transitive = false;
    bool stepwise_homogeneous = false;
    bool stepwise_transitive = false;
    // false until homogeneous/transitive have actually been computed;
    // stepwise flags are maintained by the generation pipeline.
    bool classified = false;
};

// One isotopism class: canonical key, minimal normalized representative,
// autotopism data and regularity flags.
struct ClassRecord {
    std::string canonical_key;
    MolrSet representative;
    std::uint64_t aut_order = 0;
    std::vector<Isotopism> aut_generators;   // filled when harvesting is requested
    std::vector<std::vector<int>> rect_orbits;
    RegularityFlags flags;
};

struct CanonOptions {
    bool harvest_generators = false;
};

// Canonicalization under G_{n,k,t}: backtracking over the row sent to the
// first position, the rectangle sent to the first slot and the column
// permutation (equivalently the first slot's symbol permutation, which the
// identity first row forces), pruning lexicographically against the best
// stream found so far.  Automorphisms fall out as the complete search paths
// that reproduce the minimal stream.
ClassRecord canonical_form(const MolrSet &m, const CanonOptions &opts = {});

// Raw canonical stream of an already-validated set, used as map key:
// 3 header bytes (n, k, t) followed by the cell stream.
std::string molr_stream_key(const MolrSet &m);

// The normalized form a row-by-row generator reaches first when it adds the
// lexicographically largest rows early: maximal in level-major order (all
// rectangles' rows at level 1, then level 2, ...).  Deleting its bottom row
// yields the canonical construction parent, which is what the stepwise
// classifications chain through.
MolrSet generation_form(const MolrSet &m);

// Minimum of canonical_key over the identity and the t column/symbol
// conjugates; constant on paratopism classes.
std::string paratopism_key(const MolrSet &m);

// True iff all member rectangles are pairwise isotopic as single rectangles.
bool is_homogeneous(const MolrSet &m);

// True iff Aut acts with a single orbit on the rectangles.
bool is_transitive(const ClassRecord &rec);

// The r-MOLR formed by the orbit of rectangle `start` of rec.representative
// under g (g must fix the representative).
MolrSet rect_orbit_of(const ClassRecord &rec, const Isotopism &g, int start);

// True iff some element of Aut(b) has a rectangle orbit whose MOLR is
// isotopic to a.
bool is_orbit_of(const MolrSet &a, const MolrSet &b);

// All elements of Aut(rec.representative), enumerated by closure of the
// harvested generators.  rec must come from canonical_form with harvesting.
std::vector<Isotopism> aut_group_elements(const ClassRecord &rec);

}  // namespace molr
