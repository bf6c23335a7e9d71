#include "bsr/lattice.hpp"

#include <stdexcept>

namespace bsr {

IntegerLattice IntegerLattice::from_generators(size_t ambient, const std::vector<IntVec>& gens) {
    IntegerLattice l(ambient);
    for (const IntVec& g : gens)
        if (g.size() != ambient)
            throw InputError("IntegerLattice: generator dimension mismatch");
    auto [h, u] = hermite_normal_form(gens, ambient);
    (void)u;
    for (const IntVec& col : h) {
        if (is_zero_vec(col)) continue;
        size_t p = 0;
        while (col[p] == 0) ++p;
        l.basis_.push_back(col);
        l.pivots_.push_back(p);
    }
    return l;
}

bool IntegerLattice::contains(const IntVec& v) const {
    if (v.size() != ambient_)
        throw InputError("IntegerLattice::contains: dimension mismatch");
    IntVec r = v;
    for (size_t j = 0; j < basis_.size(); ++j) {
        const Int& pivot = basis_[j][pivots_[j]];
        Int c = r[pivots_[j]] / pivot;
        if (c * pivot != r[pivots_[j]]) return false;
        if (c != 0)
            for (size_t i = 0; i < ambient_; ++i) r[i] -= c * basis_[j][i];
    }
    return is_zero_vec(r);
}

bool IntegerLattice::walk_box(const IntVec& offset, const IntVec& lo, const IntVec& hi,
                              const std::function<bool(const IntVec&)>& visit) const {
    IntVec x = offset;
    // rows settle in pivot order; rows before the next pivot are final
    std::function<bool(size_t, size_t)> rec = [&](size_t depth, size_t row_done) -> bool {
        size_t next_row = depth < basis_.size() ? pivots_[depth] : ambient_;
        for (size_t i = row_done; i < next_row; ++i)
            if (x[i] < lo[i] || x[i] > hi[i]) return false;
        if (depth == basis_.size()) return visit(x);
        const IntVec& col = basis_[depth];
        const Int& b = col[next_row]; // positive pivot
        Int t_lo = ceil_div(lo[next_row] - x[next_row], b);
        Int t_hi = floor_div(hi[next_row] - x[next_row], b);
        for (Int t = t_lo; t <= t_hi; ++t) {
            if (t != 0)
                for (size_t i = next_row; i < ambient_; ++i) x[i] += t * col[i];
            bool stop = rec(depth + 1, next_row);
            if (t != 0)
                for (size_t i = next_row; i < ambient_; ++i) x[i] -= t * col[i];
            if (stop) return true;
        }
        return false;
    };
    return rec(0, 0);
}

bool IntegerLattice::meets_box(const IntVec& offset, const IntVec& lo, const IntVec& hi) const {
    return walk_box(offset, lo, hi, [](const IntVec&) { return true; });
}

std::vector<IntVec> IntegerLattice::points_in_box(const IntVec& offset, const IntVec& lo,
                                                  const IntVec& hi) const {
    std::vector<IntVec> out;
    walk_box(offset, lo, hi, [&](const IntVec& x) {
        out.push_back(x);
        return false;
    });
    return out;
}

} // namespace bsr
