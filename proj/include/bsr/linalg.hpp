#pragma once

// Exact linear algebra over Z and Q: column Hermite normal form with
// unimodular tracking, rational Gaussian elimination, span/complement
// helpers. Matrices are stored as vectors of columns (integer, for the
// lattice side) or vectors of rows (rational, for elimination).

#include "bsr/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bsr {

inline Rational dot(const QVec& a, const IntVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool leq_componentwise(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool is_zero_vec(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline IntVec unit_vec(size_t n, size_t i) {
    IntVec e(n, 0);
    e[i] = 1;
    return e;
}

// Divides by the gcd of the entries; gcd(0) stays 0. Sign is kept.
IntVec primitive_part(IntVec v);

// Column Hermite normal form. Input is a list of columns with `rows`
// entries each; returns (H, U) with H = M*U, U unimodular, H in column
// echelon form with positive pivots and entries left of each pivot
// reduced into [0, pivot). Pivot choice: lowest row index first, then
// smallest absolute value, then lowest column index.
std::pair<std::vector<IntVec>, std::vector<IntVec>>
hermite_normal_form(const std::vector<IntVec>& cols, size_t rows);

// One exact solution of A*x = b (free variables set to 0), or nullopt if
// the system is inconsistent. Pivot order is fixed (first nonzero row per
// column), so the result is deterministic.
std::optional<QVec> solve_exact(const std::vector<QVec>& rows, const QVec& b);

// Exact determinant (Bareiss; for tests and rank checks).
Int determinant(const std::vector<IntVec>& cols);

// Rank over Q of a list of vectors.
size_t rank_of(const std::vector<IntVec>& vectors, size_t dim);

// Indices of a maximal linearly independent subset, scanning in order.
std::vector<size_t> independent_subset(const std::vector<IntVec>& vectors, size_t dim);

// Primitive integer rows c with c.v = 0 for every v in `vectors`
// (a basis of the orthogonal complement of their span).
std::vector<IntVec> integer_orthogonal_complement(const std::vector<IntVec>& vectors, size_t dim);

} // namespace bsr
