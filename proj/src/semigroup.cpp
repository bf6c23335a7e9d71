#include "bsr/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bsr {

namespace {

struct LevelSolver {
    const FaceData& fd;
    std::vector<size_t> off_face;

    explicit LevelSolver(const FaceData& fd_) : fd(fd_) {
        for (size_t j = 0; j < fd.gens.size(); ++j)
            if (!std::binary_search(fd.on_face_gens.begin(), fd.on_face_gens.end(), j))
                off_face.push_back(j);
    }

    bool solve(const IntVec& u, const Int& k) {
        Rational budget = fd.l_value(u) - fd.l_of_e - k;
        if (budget < 0) return false;
        return assign(0, budget, sub(u, IntVec(fd.n, 1)), k);
    }

    // Off-face coefficients chosen one at a time; `residual` carries
    // u - e - sum(chosen c_j v_j) and `m` the coefficient sum still owed
    // to the on-face generators.
    bool assign(size_t pos, const Rational& budget, IntVec residual, Int m) {
        if (pos == off_face.size()) return lattice_step(residual, m);
        const size_t j = off_face[pos];
        const Rational unit_cost = fd.gen_l_values[j] - 1; // > 0 off the face
        const Int c_max = rational_floor(budget / unit_cost);
        for (Int c = 0; c <= c_max; ++c) {
            if (c != 0)
                for (size_t i = 0; i < fd.n; ++i) residual[i] -= fd.gens[j][i];
            if (assign(pos + 1, budget - c * unit_cost, residual, m - c)) return true;
        }
        return false;
    }

    // Remaining question: does the on-face difference lattice contain a
    // point g <= R, where R = residual - m*w_0? Lattice points satisfy
    // L_Q(g) = 0 with strictly positive coefficients, which bounds g below.
    bool lattice_step(const IntVec& residual, const Int& m) const {
        const IntVec& w0 = fd.gens[fd.on_face_gens.front()];
        IntVec r(fd.n);
        for (size_t i = 0; i < fd.n; ++i) r[i] = residual[i] - m * w0[i];
        Rational l_of_r = 0;
        for (size_t i = 0; i < fd.n; ++i) l_of_r += fd.l_form[i] * r[i];
        if (l_of_r < 0) return false;
        IntVec lo(fd.n);
        for (size_t i = 0; i < fd.n; ++i)
            lo[i] = rational_ceil(Rational(r[i]) - l_of_r / fd.l_form[i]);
        return fd.gen_lattice.meets_box(IntVec(fd.n, 0), lo, r);
    }
};

} // namespace

bool in_level(const FaceData& fd, const IntVec& u, const Int& k) {
    if (!fd.face.bounded)
        throw InputError("in_level: face must be bounded");
    if (u.size() != fd.n)
        throw InputError("in_level: dimension mismatch");
    if (k < 0)
        throw InputError("in_level: negative level");
    return LevelSolver(fd).solve(u, k);
}

bool brute_force_in_level(const FaceData& fd, const IntVec& u, const Int& k, long coeff_bound) {
    const size_t r = fd.gens.size();
    std::vector<bool> on(r, false);
    for (size_t j : fd.on_face_gens) on[j] = true;

    IntVec residual = sub(u, IntVec(fd.n, 1));
    std::function<bool(size_t, Int)> rec = [&](size_t j, Int sum) -> bool {
        if (j == r) {
            if (sum != k) return false;
            for (size_t i = 0; i < fd.n; ++i)
                if (residual[i] < 0) return false;
            return true;
        }
        Int slack = Int(coeff_bound) * Int(r - j);
        if (sum - slack > k || sum + slack < k) return false;
        Int from = on[j] ? Int(-coeff_bound) : Int(0);
        for (Int c = from; c <= coeff_bound; ++c) {
            for (size_t i = 0; i < fd.n; ++i) residual[i] -= c * fd.gens[j][i];
            bool ok = rec(j + 1, sum + c);
            for (size_t i = 0; i < fd.n; ++i) residual[i] += c * fd.gens[j][i];
            if (ok) return true;
        }
        return false;
    };
    return rec(0, 0);
}

std::optional<Int> level_of(const FaceData& fd, const IntVec& u, const Int& k_max) {
    if (k_max < 0)
        throw InputError("level_of: negative bound");
    if (!in_level(fd, u, 0)) return std::nullopt;
    Int k = 0;
    while (k < k_max && in_level(fd, u, k + 1)) ++k;
    return k;
}

} // namespace bsr
