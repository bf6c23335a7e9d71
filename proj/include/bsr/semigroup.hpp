#pragma once

// Level membership for bounded faces. The query "u lies in the level-k set
// M_Q^(k)" is an integer feasibility problem over generator coefficients
// c_1..c_r: sum c_j = k, c_j >= 0 whenever v_j is off the face, and
// u - sum c_j v_j >= (1,...,1) componentwise.
//
// Decision procedure (exact, no search caps):
//   * off-face coefficients are enumerated directly; each unit of c_j
//     spends L_Q(v_j) - 1 > 0 of the fixed budget L_Q(u) - L_Q(e) - k,
//     so the enumeration is finite;
//   * the free on-face coefficients collapse to a lattice query: with w_0
//     a fixed on-face generator and m the residual coefficient sum, the
//     reachable sums are m*w_0 + (difference lattice of the on-face
//     generators), and the constraint becomes "some lattice point g <= R
//     componentwise". All lattice points satisfy L_Q(g) = 0 and L_Q has
//     strictly positive coefficients on a bounded face, which pins g into
//     a finite box.

#include "bsr/face_data.hpp"

#include <optional>

namespace bsr {

struct MembershipQuery {
    const FaceData* face_data;
    IntVec u;
    Int k;
};

bool in_level(const FaceData& fd, const IntVec& u, const Int& k);
inline bool in_level(const MembershipQuery& q) { return in_level(*q.face_data, q.u, q.k); }

// Exhaustive search over |c_j| <= coeff_bound (c_j >= 0 off the face).
// Sound as a positive certificate; used as the independent cross-check.
bool brute_force_in_level(const FaceData& fd, const IntVec& u, const Int& k, long coeff_bound);

// Largest k <= k_max with u in M_Q^(k), or nullopt if u is not even in
// M_Q^(0). Levels are nested, so the scan stops at the first failure.
std::optional<Int> level_of(const FaceData& fd, const IntVec& u, const Int& k_max);

} // namespace bsr
