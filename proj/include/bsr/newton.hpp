#pragma once

// Newton polyhedron P = conv(generators) + R_{>=0}^n: exact H-representation
// (facets), V-representation (vertex generators plus the n unit rays), and
// the proper face lattice with incidence, boundedness and
// coordinate-hyperplane flags.
//
// Facets are found as extreme rays of the cone of valid inequalities
// { (a, c) : a.v_j >= c for all j, a >= 0 } in R^{n+1}, via the double
// description method seeded with the orthant rows and the first generator,
// inserting the remaining generators one at a time.

#include "bsr/ideal.hpp"

#include <string>
#include <vector>

namespace bsr {

struct Facet {
    IntVec normal;     // nonnegative entries, gcd 1
    Int offset;        // c with normal.x >= c on P, c >= 0
    bool coordinate;   // c == 0, i.e. the facet lies in {x_i = 0}
};

struct Face {
    int id = -1;
    std::vector<size_t> vertex_ids;      // indices into NewtonPolyhedron::vertices
    std::vector<size_t> recession_dirs;  // 0-based coordinates i with Q + e_i in Q
    std::vector<size_t> incident_facets; // all facets containing the face
    size_t dim = 0;
    bool bounded = false;
    bool in_coordinate_hyperplane = false;
};

struct NewtonPolyhedron {
    MonomialIdeal ideal;
    std::vector<IntVec> vertices; // subset of the generators, sorted
    std::vector<Facet> facets;    // sorted lexicographically by (normal, offset)
};

NewtonPolyhedron build_polyhedron(const MonomialIdeal& ideal);

// All proper nonempty faces, facets included, P itself excluded.
// Deterministic order: by dimension, then by vertex/ray id sets.
std::vector<Face> enumerate_faces(const NewtonPolyhedron& poly);

} // namespace bsr
