#pragma once

// A nonzero monomial ideal, given by the exponent vectors of its
// generators. Generators are deduplicated and kept in lexicographic order;
// redundant generators are allowed (they do not change the polyhedron, but
// they do enlarge the exponent semigroup, which matters downstream).

#include "bsr/linalg.hpp"

#include <vector>

namespace bsr {

struct MonomialIdeal {
    size_t n = 0;                // number of variables
    std::vector<IntVec> gens;    // sorted, deduplicated, entries >= 0
    bool unit = false;           // true iff the zero exponent vector occurs

    static MonomialIdeal create(size_t n, std::vector<IntVec> generators);

    // x^u in the ideal, i.e. u dominates some generator componentwise.
    bool gamma_contains(const IntVec& u) const;

    // Delete coordinate `drop` (0-based) from every generator; n must be >= 2.
    MonomialIdeal project(size_t drop) const;
};

} // namespace bsr
