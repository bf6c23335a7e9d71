#include "bsr/face_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsr {

namespace {

bool on_all_incident(const NewtonPolyhedron& poly, const Face& face, const IntVec& u) {
    for (size_t fi : face.incident_facets)
        if (dot(poly.facets[fi].normal, u) != poly.facets[fi].offset) return false;
    return true;
}

bool in_polyhedron(const NewtonPolyhedron& poly, const IntVec& u) {
    for (const Facet& f : poly.facets)
        if (dot(f.normal, u) < f.offset) return false;
    return true;
}

} // namespace

FaceData compute_face_data(const NewtonPolyhedron& poly, const Face& face,
                           const FaceDataOptions& opts) {
    if (face.in_coordinate_hyperplane)
        throw InputError("face_data: face lies in a coordinate hyperplane");
    const size_t n = poly.ideal.n;

    FaceData fd;
    fd.face = face;
    fd.n = n;
    fd.gens = poly.ideal.gens;

    // L_Q: weighted average of (normal_F . x) / c_F over the incident
    // facets. A face outside every coordinate hyperplane is incident only
    // to non-coordinate facets, so every c_F > 0.
    std::vector<size_t> forms;
    for (size_t fi : face.incident_facets)
        if (!poly.facets[fi].coordinate) forms.push_back(fi);
    if (forms.empty() || forms.size() != face.incident_facets.size())
        throw std::logic_error("face_data: coordinate facet incident to a non-coordinate face");

    std::vector<Int> weights = opts.facet_weights;
    if (weights.empty()) weights.assign(forms.size(), Int(1));
    if (weights.size() != forms.size())
        throw InputError("face_data: weight count does not match incident facets");
    Rational total = 0;
    fd.l_form.assign(n, Rational(0));
    for (size_t k = 0; k < forms.size(); ++k) {
        const Facet& f = poly.facets[forms[k]];
        if (weights[k] <= 0) throw InputError("face_data: weights must be positive");
        for (size_t i = 0; i < n; ++i)
            fd.l_form[i] += Rational(weights[k] * f.normal[i], f.offset);
        total += weights[k];
    }
    for (size_t i = 0; i < n; ++i) fd.l_form[i] /= total;
    if (face.bounded)
        for (size_t i = 0; i < n; ++i)
            if (fd.l_form[i] <= 0)
                throw std::logic_error("face_data: bounded face needs a strictly positive form");
    fd.l_of_e = 0;
    for (size_t i = 0; i < n; ++i) fd.l_of_e += fd.l_form[i];
    if (face.dim == n - 1) fd.m_q = lcm_of_denominators(fd.l_form);

    // V_Q = linear span of the face's vertices and recession rays.
    std::vector<IntVec> spanning;
    for (size_t vid : face.vertex_ids) spanning.push_back(poly.vertices[vid]);
    for (size_t i : face.recession_dirs) spanning.push_back(unit_vec(n, i));
    for (size_t idx : independent_subset(spanning, n)) fd.span_basis.push_back(spanning[idx]);
    fd.span_constraints = integer_orthogonal_complement(fd.span_basis, n);

    fd.gen_l_values.reserve(fd.gens.size());
    for (size_t j = 0; j < fd.gens.size(); ++j) {
        fd.gen_l_values.push_back(dot(fd.l_form, fd.gens[j]));
        if (on_all_incident(poly, face, fd.gens[j])) fd.on_face_gens.push_back(j);
    }
    if (fd.on_face_gens.empty())
        throw std::logic_error("face_data: face carries no generator");

    if (face.bounded) {
        // W_Q: lattice points of the face that lie in the exponent
        // semigroup, enumerated over the vertex bounding box.
        IntVec lo(n), hi(n);
        for (size_t i = 0; i < n; ++i) {
            lo[i] = poly.vertices[face.vertex_ids.front()][i];
            hi[i] = lo[i];
            for (size_t vid : face.vertex_ids) {
                lo[i] = std::min(lo[i], poly.vertices[vid][i]);
                hi[i] = std::max(hi[i], poly.vertices[vid][i]);
            }
        }
        IntVec u = lo;
        for (;;) {
            if (on_all_incident(poly, face, u) && in_polyhedron(poly, u) &&
                poly.ideal.gamma_contains(u))
                fd.w_points.push_back(u);
            size_t i = 0;
            while (i < n && u[i] == hi[i]) { u[i] = lo[i]; ++i; }
            if (i == n) break;
            ++u[i];
        }
        std::sort(fd.w_points.begin(), fd.w_points.end());
        if (fd.w_points.empty())
            throw std::logic_error("face_data: bounded face with empty W_Q");

        fd.v0 = opts.v0_override ? *opts.v0_override : fd.w_points.front();
        if (!std::binary_search(fd.w_points.begin(), fd.w_points.end(), fd.v0))
            throw InputError("face_data: v0 override is not in W_Q");

        std::vector<IntVec> w_diffs;
        for (const IntVec& w : fd.w_points) w_diffs.push_back(sub(w, fd.v0));
        fd.w_lattice = IntegerLattice::from_generators(n, w_diffs);

        std::vector<IntVec> gen_diffs;
        const IntVec& base = fd.gens[fd.on_face_gens.front()];
        for (size_t j : fd.on_face_gens) gen_diffs.push_back(sub(fd.gens[j], base));
        fd.gen_lattice = IntegerLattice::from_generators(n, gen_diffs);
    }
    return fd;
}

} // namespace bsr
