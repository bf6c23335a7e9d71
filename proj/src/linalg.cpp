#include "bsr/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace bsr {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        if (q <= 0) throw InputError("parse_rational: nonpositive denominator in '" + text + "'");
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw InputError("parse_rational: malformed rational '" + text + "'");
    }
}

IntVec primitive_part(IntVec v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

namespace {

void sub_scaled(IntVec& a, const Int& q, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
}

void negate(IntVec& a) {
    for (Int& x : a) x = -x;
}

} // namespace

std::pair<std::vector<IntVec>, std::vector<IntVec>>
hermite_normal_form(const std::vector<IntVec>& cols, size_t rows) {
    const size_t nc = cols.size();
    std::vector<IntVec> h = cols;
    std::vector<IntVec> u(nc);
    for (size_t j = 0; j < nc; ++j) u[j] = unit_vec(nc, j);

    size_t pc = 0; // next pivot column
    for (size_t row = 0; row < rows && pc < nc; ++row) {
        for (;;) {
            // candidate columns with a nonzero entry in this row
            size_t best = nc;
            for (size_t j = pc; j < nc; ++j) {
                if (h[j][row] == 0) continue;
                if (best == nc || abs(h[j][row]) < abs(h[best][row])) best = j;
            }
            if (best == nc) break; // row settled, no pivot here
            if (best != pc) {
                std::swap(h[pc], h[best]);
                std::swap(u[pc], u[best]);
            }
            if (h[pc][row] < 0) {
                negate(h[pc]);
                negate(u[pc]);
            }
            bool others = false;
            for (size_t j = pc + 1; j < nc; ++j) {
                if (h[j][row] == 0) continue;
                Int q = floor_div(h[j][row], h[pc][row]);
                if (q != 0) {
                    sub_scaled(h[j], q, h[pc]);
                    sub_scaled(u[j], q, u[pc]);
                }
                if (h[j][row] != 0) others = true;
            }
            if (!others) {
                // reduce entries left of the pivot into [0, pivot)
                for (size_t l = 0; l < pc; ++l) {
                    Int q = floor_div(h[l][row], h[pc][row]);
                    if (q != 0) {
                        sub_scaled(h[l], q, h[pc]);
                        sub_scaled(u[l], q, u[pc]);
                    }
                }
                ++pc;
                break;
            }
        }
    }
    return {std::move(h), std::move(u)};
}

std::optional<QVec> solve_exact(const std::vector<QVec>& rows, const QVec& b) {
    const size_t m = rows.size();
    const size_t n = m ? rows[0].size() : 0;
    std::vector<QVec> a = rows;
    QVec rhs = b;

    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < m; ++c) {
        size_t p = m;
        for (size_t r = rank; r < m; ++r)
            if (a[r][c] != 0) { p = r; break; }
        if (p == m) continue;
        std::swap(a[rank], a[p]);
        std::swap(rhs[rank], rhs[p]);
        Rational inv = a[rank][c];
        for (size_t j = c; j < n; ++j) a[rank][j] /= inv;
        rhs[rank] /= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[rank][j];
            rhs[r] -= f * rhs[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (size_t r = rank; r < m; ++r)
        if (rhs[r] != 0) return std::nullopt;

    QVec x(n, Rational(0));
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
    return x;
}

Int determinant(const std::vector<IntVec>& cols) {
    const size_t n = cols.size();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination, row-major working copy.
    std::vector<IntVec> a(n, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = n;
            for (size_t r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

// Row echelon over Q; returns pivot columns and leaves `a` reduced.
std::vector<size_t> rref(std::vector<QVec>& a, size_t n) {
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < a.size(); ++c) {
        size_t p = a.size();
        for (size_t r = rank; r < a.size(); ++r)
            if (a[r][c] != 0) { p = r; break; }
        if (p == a.size()) continue;
        std::swap(a[rank], a[p]);
        Rational inv = a[rank][c];
        for (size_t j = 0; j < n; ++j) a[rank][j] /= inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (size_t j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

} // namespace

size_t rank_of(const std::vector<IntVec>& vectors, size_t dim) {
    std::vector<QVec> a;
    a.reserve(vectors.size());
    for (const IntVec& v : vectors) {
        QVec row(dim);
        for (size_t i = 0; i < dim; ++i) row[i] = v[i];
        a.push_back(std::move(row));
    }
    return rref(a, dim).size();
}

std::vector<size_t> independent_subset(const std::vector<IntVec>& vectors, size_t dim) {
    std::vector<size_t> chosen;
    std::vector<QVec> basis; // kept in echelon form
    for (size_t idx = 0; idx < vectors.size(); ++idx) {
        QVec v(dim);
        for (size_t i = 0; i < dim; ++i) v[i] = vectors[idx][i];
        // reduce against current echelon basis
        for (const QVec& b : basis) {
            size_t lead = 0;
            while (lead < dim && b[lead] == 0) ++lead;
            if (lead < dim && v[lead] != 0) {
                Rational f = v[lead] / b[lead];
                for (size_t j = 0; j < dim; ++j) v[j] -= f * b[j];
            }
        }
        size_t lead = 0;
        while (lead < dim && v[lead] == 0) ++lead;
        if (lead == dim) continue;
        chosen.push_back(idx);
        // insert keeping leads increasing
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), [dim](const QVec& x, const QVec& y) {
            size_t lx = 0, ly = 0;
            while (lx < dim && x[lx] == 0) ++lx;
            while (ly < dim && y[ly] == 0) ++ly;
            return lx < ly;
        });
    }
    return chosen;
}

std::vector<IntVec> integer_orthogonal_complement(const std::vector<IntVec>& vectors, size_t dim) {
    std::vector<QVec> a;
    for (const IntVec& v : vectors) {
        QVec row(dim);
        for (size_t i = 0; i < dim; ++i) row[i] = v[i];
        a.push_back(std::move(row));
    }
    std::vector<size_t> pivots = rref(a, dim);
    std::vector<bool> is_pivot(dim, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<IntVec> result;
    for (size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        QVec sol(dim, Rational(0));
        sol[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = -a[r][f];
        Int m = lcm_of_denominators(sol);
        IntVec row(dim);
        for (size_t i = 0; i < dim; ++i) row[i] = num(sol[i] * m);
        result.push_back(primitive_part(std::move(row)));
    }
    return result;
}

} // namespace bsr
