#pragma once

// Root extraction. Per bounded face Q outside the coordinate hyperplanes:
// enumerate candidate exponents u in Z_{>0}^n intersected with the span of
// Q, with L_Q(u) below a configurable bound and not dominated by a shifted
// lattice coset (a finite superset of the minimal candidate set; supersets
// are harmless because level classification sends every candidate to the
// same root its reduction would give). Each candidate contributes the root
// k - L_Q(u) at its level k. Unbounded faces are handled by deleting a
// coordinate in which they are translation-invariant and recursing on the
// projected ideal; the unit ideal contributes nothing.

#include "bsr/face_data.hpp"
#include "bsr/semigroup.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace bsr {

using RootSet = std::set<Rational>;
using ResidueSet = std::set<Rational>;

struct EngineConfig {
    // Candidate bound: L_Q(u) <= max(2n + l_bound_shift, n), per recursion level.
    int l_bound_shift = 0;
    // Coefficient bound for the brute-force membership cross-check.
    int brute_cap = 20;
    // Keep 0-dimensional faces even when n >= 2 (they add no roots).
    bool include_vertices = false;
    // Recompute with l_bound_shift + 2 and compare.
    bool audit = false;
    // Use index-weighted supporting forms instead of the uniform average
    // (any strictly positive weights are valid; for invariance checks).
    bool alt_face_forms = false;
};

struct FaceContribution {
    std::string ideal_label; // "" for the input ideal, "/dropN..." through projections
    int face_id = -1;
    QVec l_form;
    std::map<Int, std::vector<IntVec>> levels; // k -> classified candidates
    RootSet roots;
};

struct RootResult {
    RootSet roots;
    std::vector<FaceContribution> contributions;
    bool audit_ran = false;
    bool audit_stable = true;
};

// Effective candidate bound for an ideal in n variables.
Int effective_l_bound(size_t n, const EngineConfig& cfg);

// Candidate exponents for a bounded face, in lexicographic order.
std::vector<IntVec> candidates(const FaceData& fd, const EngineConfig& cfg);

FaceContribution face_roots(const FaceData& fd, const EngineConfig& cfg);

RootResult all_roots(const MonomialIdeal& ideal, const EngineConfig& cfg = {});

// Classes mod Z of the root set: the union of the subgroups generated by
// 1/m_Q over the non-coordinate facets. Depends only on the polyhedron.
ResidueSet roots_mod_z(const MonomialIdeal& ideal);

// Per-facet data behind roots_mod_z: (facet index, m_Q).
std::vector<std::pair<size_t, Int>> facet_orders(const NewtonPolyhedron& poly);

// Closed form for a vertical unbounded edge {(a, y) : y >= b} in the
// plane: the roots contributed are -1/a, ..., -a/a.
RootSet n2_unbounded_edge_roots(const Int& a);

Rational residue_mod_1(const Rational& r);

} // namespace bsr
