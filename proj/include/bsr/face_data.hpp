#pragma once

// Everything root extraction needs about one face: the supporting form
// L_Q (= 1 on the face, > 1 at generators off it, coefficients >= 0), the
// linear span of the face, the exponents of the ideal lying on the face,
// and the two difference lattices (one from those exponents, one from the
// on-face generators).

#include "bsr/lattice.hpp"
#include "bsr/newton.hpp"

#include <optional>

namespace bsr {

struct FaceDataOptions {
    // Weights for the incident facet forms entering L_Q (default: all 1).
    // Any strictly positive weights give a valid supporting form.
    std::vector<Int> facet_weights;
    // Base point override; must be an element of W_Q.
    std::optional<IntVec> v0_override;
};

struct FaceData {
    Face face;
    size_t n = 0;
    std::vector<IntVec> gens;          // the ideal's generators

    QVec l_form;                       // L_Q coefficients, all >= 0
    Rational l_of_e;                   // L_Q(1,...,1)
    Int m_q = 0;                       // facets only, else 0

    std::vector<IntVec> span_basis;        // basis of V_Q (subset of verts + rays)
    std::vector<IntVec> span_constraints;  // integer rows C with V_Q = ker C

    std::vector<size_t> on_face_gens;  // indices j with v_j on the face
    QVec gen_l_values;                 // L_Q(v_j) for every generator

    // Bounded faces only:
    std::vector<IntVec> w_points;      // W_Q = Gamma intersect Q, sorted
    IntVec v0;                         // chosen element of W_Q
    IntegerLattice w_lattice;          // differences of W_Q elements
    IntegerLattice gen_lattice;        // differences of on-face generators

    Rational l_value(const IntVec& u) const { return dot(l_form, u); }
    bool in_span(const IntVec& u) const {
        for (const IntVec& c : span_constraints)
            if (dot(c, u) != 0) return false;
        return true;
    }
};

FaceData compute_face_data(const NewtonPolyhedron& poly, const Face& face,
                           const FaceDataOptions& opts = {});

} // namespace bsr
