#pragma once

// Sublattices of Z^n, stored through a column-HNF basis. Membership is a
// forward substitution along pivot rows; box queries walk the basis columns
// depth-first, bounding each coefficient by the pivot-row interval and
// rejecting rows as soon as they are fully determined.

#include "bsr/linalg.hpp"

#include <functional>
#include <vector>

namespace bsr {

class IntegerLattice {
public:
    IntegerLattice() = default;
    explicit IntegerLattice(size_t ambient) : ambient_(ambient) {}

    static IntegerLattice from_generators(size_t ambient, const std::vector<IntVec>& gens);

    size_t ambient() const { return ambient_; }
    size_t rank() const { return basis_.size(); }
    const std::vector<IntVec>& basis() const { return basis_; }
    const std::vector<size_t>& pivot_rows() const { return pivots_; }

    bool contains(const IntVec& v) const;

    // True iff some x = offset + (integer combination of basis) satisfies
    // lo <= x <= hi componentwise.
    bool meets_box(const IntVec& offset, const IntVec& lo, const IntVec& hi) const;

    // All such x, in depth-first coefficient order.
    std::vector<IntVec> points_in_box(const IntVec& offset, const IntVec& lo,
                                      const IntVec& hi) const;

private:
    bool walk_box(const IntVec& offset, const IntVec& lo, const IntVec& hi,
                  const std::function<bool(const IntVec&)>& visit) const;

    size_t ambient_ = 0;
    std::vector<IntVec> basis_;   // HNF columns, zero columns dropped
    std::vector<size_t> pivots_;  // strictly increasing pivot row per column
};

} // namespace bsr
