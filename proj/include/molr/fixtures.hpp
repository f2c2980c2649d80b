// fixtures.hpp -- embedded reference objects used by the verify suites.

#pragma once

#include <cstdint>
#include <vector>

#include "molr/core.hpp"

namespace molr::fixtures {

// The unique stepwise transitive 6-MOLS of order 9 (autotopism order 432).
const MolrSet &six_mols_order9();

// The 3-MOLS of order 8 with autotopism order 48 whose transitive action is
// not an orbit of any larger set.
const MolrSet &three_mols_order8();

// The 9 x 10 3-MOLR whose forced completion to squares confines every
// orthogonality violation to the last row.
const MolrSet &three_molr_9x10();

// The five stepwise transitive 8-MOLS of order 9, in caption order.
const std::vector<MolrSet> &eight_mols_order9();

// Captioned autotopism orders of eight_mols_order9(), same order.
const std::vector<std::uint64_t> &eight_mols_order9_aut_orders();

}  // namespace molr::fixtures
