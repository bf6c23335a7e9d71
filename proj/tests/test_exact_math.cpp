#include <doctest.h>

#include "bsr/lattice.hpp"
#include "bsr/linalg.hpp"

#include <functional>
#include <random>

using namespace bsr;

namespace {

// Oracle: v is an integer combination of the generators with all
// coefficients in [-bound, bound].
bool combo_reaches(const std::vector<IntVec>& gens, const IntVec& v, long bound) {
    size_t n = v.size();
    std::function<bool(size_t, IntVec)> rec = [&](size_t j, IntVec acc) -> bool {
        if (j == gens.size()) return acc == v;
        for (long c = -bound; c <= bound; ++c) {
            IntVec next = acc;
            for (size_t i = 0; i < n; ++i) next[i] += c * gens[j][i];
            if (rec(j + 1, next)) return true;
        }
        return false;
    };
    return rec(0, IntVec(n, 0));
}

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

QVec qv(std::initializer_list<Rational> xs) { return QVec(xs); }

} // namespace

TEST_CASE("hnf of the identity is the identity") {
    std::vector<IntVec> m = {iv({1, 0}), iv({0, 1})};
    auto [h, u] = hermite_normal_form(m, 2);
    CHECK(h == m);
    CHECK(u == m);
}

TEST_CASE("hnf of the zero matrix is zero") {
    std::vector<IntVec> m = {iv({0, 0}), iv({0, 0})};
    auto [h, u] = hermite_normal_form(m, 2);
    CHECK(h == m);
    CHECK(abs(determinant(u)) == 1);
}

TEST_CASE("hnf collapses dependent columns") {
    // columns (2,-2), (-2,2) span the lattice Z*(2,-2)
    std::vector<IntVec> m = {iv({2, -2}), iv({-2, 2})};
    auto [h, u] = hermite_normal_form(m, 2);
    CHECK(h[0] == iv({2, -2}));
    CHECK(h[1] == iv({0, 0}));
    // oracle: both lattices contain each other's generators
    IntegerLattice from_h = IntegerLattice::from_generators(2, h);
    CHECK(from_h.contains(iv({2, -2})));
    CHECK(from_h.contains(iv({-2, 2})));
    CHECK(combo_reaches(m, h[0], 3));
}

TEST_CASE("hnf: H = M*U with U unimodular, same lattice (randomized)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        std::vector<IntVec> m(cols, IntVec(rows));
        for (auto& col : m)
            for (auto& x : col) x = entry(rng);
        auto [h, u] = hermite_normal_form(m, rows);
        CHECK(abs(determinant(u)) == 1);
        // H == M*U entrywise
        for (size_t j = 0; j < cols; ++j)
            for (size_t i = 0; i < rows; ++i) {
                Int s = 0;
                for (size_t t = 0; t < cols; ++t) s += m[t][i] * u[j][t];
                CHECK(s == h[j][i]);
            }
        IntegerLattice lm = IntegerLattice::from_generators(rows, m);
        IntegerLattice lh = IntegerLattice::from_generators(rows, h);
        for (const IntVec& col : m) CHECK(lh.contains(col));
        for (const IntVec& col : h) CHECK(lm.contains(col));
    }
}

TEST_CASE("lattice membership") {
    IntegerLattice l = IntegerLattice::from_generators(2, {iv({2, -2})});
    CHECK(l.contains(iv({4, -4})));
    CHECK(combo_reaches({iv({2, -2})}, iv({4, -4}), 5));
    CHECK_FALSE(l.contains(iv({1, -1})));
    CHECK_FALSE(combo_reaches({iv({2, -2})}, iv({1, -1}), 5));
    CHECK(l.contains(iv({0, 0})));
    CHECK_THROWS_AS((void)l.contains(iv({1, 2, 3})), InputError);
}

TEST_CASE("lattice membership: group laws (randomized)") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::vector<IntVec> gens = {iv({2, 1, 0}), iv({0, 3, -1})};
    IntegerLattice l = IntegerLattice::from_generators(3, gens);
    for (int trial = 0; trial < 60; ++trial) {
        IntVec a(3), b(3);
        for (auto& x : a) x = entry(rng);
        for (auto& x : b) x = entry(rng);
        if (l.contains(a) && l.contains(b)) CHECK(l.contains(add(a, b)));
        IntVec neg(3);
        for (size_t i = 0; i < 3; ++i) neg[i] = -a[i];
        CHECK(l.contains(a) == l.contains(neg));
        CHECK(l.contains(a) == combo_reaches(gens, a, 4));
    }
}

TEST_CASE("lattice box walks") {
    IntegerLattice l = IntegerLattice::from_generators(2, {iv({2, -3})});
    // points t*(2,-3) with -4 <= x <= 4: t in {-2..2}
    auto pts = l.points_in_box(iv({0, 0}), iv({-4, -6}), iv({4, 6}));
    CHECK(pts.size() == 5);
    CHECK(l.meets_box(iv({1, 5}), iv({0, 0}), iv({3, 5})));        // (1,5) itself, (3,2)
    CHECK_FALSE(l.meets_box(iv({1, 5}), iv({0, 0}), iv({0, 4})));  // nothing fits
}

TEST_CASE("solve_exact identity") {
    std::vector<QVec> a = {qv({1, 0}), qv({0, 1})};
    QVec b = qv({Rational(5, 3), Rational(-2)});
    auto x = solve_exact(a, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
}

TEST_CASE("solve_exact 2x2") {
    std::vector<QVec> a = {qv({2, 1}), qv({1, 3})};
    auto x = solve_exact(a, qv({5, 5}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    // oracle: substitute back
    CHECK(2 * (*x)[0] + (*x)[1] == 5);
    CHECK((*x)[0] + 3 * (*x)[1] == 5);
}

TEST_CASE("solve_exact inconsistency") {
    std::vector<QVec> a = {qv({1, 1}), qv({2, 2})};
    CHECK_FALSE(solve_exact(a, qv({1, 3})).has_value());
}

TEST_CASE("solve_exact reproduces b on random solvable systems") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        size_t m = 1 + rng() % 3, n = 1 + rng() % 3;
        std::vector<QVec> a(m, QVec(n));
        QVec x0(n);
        for (auto& row : a)
            for (auto& q : row) q = entry(rng);
        for (auto& q : x0) q = Rational(entry(rng), 1 + rng() % 3);
        QVec b(m, Rational(0));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
        auto x = solve_exact(a, b);
        REQUIRE(x.has_value());
        for (size_t i = 0; i < m; ++i) {
            Rational s = 0;
            for (size_t j = 0; j < n; ++j) s += a[i][j] * (*x)[j];
            CHECK(s == b[i]);
        }
    }
}

TEST_CASE("lcm of denominators") {
    CHECK(lcm_of_denominators(qv({Rational(3, 13), Rational(2, 13)})) == 13);
    CHECK(lcm_of_denominators(qv({1, 0, 2})) == 1);
    CHECK(lcm_of_denominators(qv({Rational(1, 4), Rational(1, 6)})) == 12);
    // oracle: scan m upward
    QVec v = qv({Rational(1, 4), Rational(1, 6)});
    Int scan = 1;
    auto integral = [&](const Int& m) {
        for (const Rational& q : v)
            if (num(q) * m % den(q) != 0) return false;
        return true;
    };
    while (!integral(scan)) ++scan;
    CHECK(scan == 12);
}

TEST_CASE("lcm minimality: no prime divisor can be dropped") {
    QVec v = qv({Rational(5, 12), Rational(7, 18), Rational(1, 2)});
    Int m = lcm_of_denominators(v);
    CHECK(m == 36);
    for (Int p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        bool prime = true;
        for (Int d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        Int reduced = m / p;
        bool still_integral = true;
        for (const Rational& q : v)
            if (num(q) * reduced % den(q) != 0) still_integral = false;
        CHECK_FALSE(still_integral);
    }
}

TEST_CASE("orthogonal complement is orthogonal and has full corank") {
    std::vector<IntVec> span = {iv({3, 0, 3}), iv({0, 3, 3})};
    auto comp = integer_orthogonal_complement(span, 3);
    REQUIRE(comp.size() == 1);
    for (const IntVec& c : comp)
        for (const IntVec& v : span) CHECK(dot(c, v) == 0);
}
