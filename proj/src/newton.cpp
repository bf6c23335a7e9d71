#include "bsr/newton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bsr {

namespace {

// A ray of the inequality cone, with the set of processed constraints it
// saturates (for the combinatorial adjacency test).
struct Ray {
    IntVec v;                 // n+1 entries: (a_1..a_n, c)
    std::set<size_t> tight;   // indices of saturated constraints
};

Int eval(const IntVec& constraint, const IntVec& ray) {
    return dot(constraint, ray);
}

bool adjacent(const std::vector<Ray>& rays, size_t i, size_t j) {
    std::set<size_t> common;
    std::set_intersection(rays[i].tight.begin(), rays[i].tight.end(),
                          rays[j].tight.begin(), rays[j].tight.end(),
                          std::inserter(common, common.begin()));
    for (size_t k = 0; k < rays.size(); ++k) {
        if (k == i || k == j) continue;
        if (std::includes(rays[k].tight.begin(), rays[k].tight.end(),
                          common.begin(), common.end()))
            return false;
    }
    return true;
}

} // namespace

NewtonPolyhedron build_polyhedron(const MonomialIdeal& ideal) {
    const size_t n = ideal.n;
    const size_t dim = n + 1;

    // Constraint rows of the inequality cone: (e_i, 0) and (v_j, -1).
    std::vector<IntVec> constraints;
    for (size_t i = 0; i < n; ++i) constraints.push_back(unit_vec(dim, i));
    for (const IntVec& g : ideal.gens) {
        IntVec row(dim);
        for (size_t i = 0; i < n; ++i) row[i] = g[i];
        row[n] = -1;
        constraints.push_back(row);
    }

    // Seed: the simplicial cone cut out by the orthant rows and the first
    // generator row. Its dual basis is explicit: rays (e_i, v_1[i]) and
    // (0,...,0,-1).
    std::vector<Ray> rays;
    const IntVec& g0 = ideal.gens.front();
    size_t processed = n + 1; // constraints[0..n] are active from the start
    for (size_t i = 0; i < n; ++i) {
        Ray r;
        r.v = unit_vec(dim, i);
        r.v[n] = g0[i];
        rays.push_back(std::move(r));
    }
    {
        Ray r;
        r.v = IntVec(dim, 0);
        r.v[n] = -1;
        rays.push_back(std::move(r));
    }
    for (Ray& r : rays)
        for (size_t k = 0; k < processed; ++k)
            if (eval(constraints[k], r.v) == 0) r.tight.insert(k);

    for (; processed < constraints.size(); ++processed) {
        const IntVec& c = constraints[processed];
        std::vector<Int> value(rays.size());
        bool any_negative = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            value[i] = eval(c, rays[i].v);
            if (value[i] < 0) any_negative = true;
        }
        if (!any_negative) {
            for (size_t i = 0; i < rays.size(); ++i)
                if (value[i] == 0) rays[i].tight.insert(processed);
            continue;
        }
        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (value[i] < 0) continue;
            Ray kept = rays[i];
            if (value[i] == 0) kept.tight.insert(processed);
            next.push_back(std::move(kept));
        }
        for (size_t i = 0; i < rays.size(); ++i) {
            if (value[i] <= 0) continue;
            for (size_t j = 0; j < rays.size(); ++j) {
                if (value[j] >= 0) continue;
                if (!adjacent(rays, i, j)) continue;
                Ray combo;
                combo.v.resize(dim);
                for (size_t t = 0; t < dim; ++t)
                    combo.v[t] = value[i] * rays[j].v[t] - value[j] * rays[i].v[t];
                combo.v = primitive_part(std::move(combo.v));
                for (size_t k = 0; k <= processed; ++k)
                    if (eval(constraints[k], combo.v) == 0) combo.tight.insert(k);
                next.push_back(std::move(combo));
            }
        }
        // dedupe (primitive vectors are canonical)
        std::sort(next.begin(), next.end(),
                  [](const Ray& a, const Ray& b) { return a.v < b.v; });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Ray& a, const Ray& b) { return a.v == b.v; }),
                   next.end());
        rays = std::move(next);
    }

    NewtonPolyhedron poly;
    poly.ideal = ideal;
    for (const Ray& r : rays) {
        IntVec normal(r.v.begin(), r.v.begin() + n);
        if (is_zero_vec(normal)) continue; // the trivial ray (0,...,0,-1)
        Facet f;
        f.normal = std::move(normal);
        f.offset = r.v[n];
        if (f.offset < 0)
            throw std::logic_error("build_polyhedron: facet with negative offset");
        f.coordinate = (f.offset == 0);
        poly.facets.push_back(std::move(f));
    }
    std::sort(poly.facets.begin(), poly.facets.end(), [](const Facet& a, const Facet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });

    // Vertices: generators whose tight facet normals span R^n.
    for (const IntVec& g : ideal.gens) {
        std::vector<IntVec> tight;
        for (const Facet& f : poly.facets)
            if (dot(f.normal, g) == f.offset) tight.push_back(f.normal);
        if (rank_of(tight, n) == n) poly.vertices.push_back(g);
    }
    std::sort(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

namespace {

// A face keyed by its tight vertex and ray index sets.
using FaceKey = std::pair<std::vector<size_t>, std::vector<size_t>>;

FaceKey facet_key(const NewtonPolyhedron& poly, const Facet& f) {
    FaceKey key;
    for (size_t v = 0; v < poly.vertices.size(); ++v)
        if (dot(f.normal, poly.vertices[v]) == f.offset) key.first.push_back(v);
    for (size_t i = 0; i < poly.ideal.n; ++i)
        if (f.normal[i] == 0) key.second.push_back(i);
    return key;
}

FaceKey intersect_keys(const FaceKey& a, const FaceKey& b) {
    FaceKey out;
    std::set_intersection(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
                          std::back_inserter(out.first));
    std::set_intersection(a.second.begin(), a.second.end(), b.second.begin(), b.second.end(),
                          std::back_inserter(out.second));
    return out;
}

} // namespace

std::vector<Face> enumerate_faces(const NewtonPolyhedron& poly) {
    const size_t n = poly.ideal.n;

    std::vector<FaceKey> facet_keys;
    facet_keys.reserve(poly.facets.size());
    for (const Facet& f : poly.facets) facet_keys.push_back(facet_key(poly, f));

    // Closure of the facet keys under pairwise intersection; a face is
    // nonempty iff it keeps a vertex.
    std::set<FaceKey> known(facet_keys.begin(), facet_keys.end());
    std::vector<FaceKey> queue(known.begin(), known.end());
    while (!queue.empty()) {
        FaceKey cur = queue.back();
        queue.pop_back();
        for (const FaceKey& fk : facet_keys) {
            FaceKey meet = intersect_keys(cur, fk);
            if (meet.first.empty()) continue;
            if (known.insert(meet).second) queue.push_back(meet);
        }
    }

    std::vector<Face> faces;
    for (const FaceKey& key : known) {
        Face face;
        face.vertex_ids = key.first;
        face.recession_dirs = key.second;
        for (size_t fi = 0; fi < poly.facets.size(); ++fi) {
            const FaceKey& fk = facet_keys[fi];
            bool contains =
                std::includes(fk.first.begin(), fk.first.end(), key.first.begin(), key.first.end()) &&
                std::includes(fk.second.begin(), fk.second.end(), key.second.begin(), key.second.end());
            if (contains) face.incident_facets.push_back(fi);
        }
        // affine dimension of conv(verts) + cone(rays)
        std::vector<IntVec> dirs;
        const IntVec& v0 = poly.vertices[face.vertex_ids.front()];
        for (size_t k = 1; k < face.vertex_ids.size(); ++k)
            dirs.push_back(sub(poly.vertices[face.vertex_ids[k]], v0));
        for (size_t i : face.recession_dirs) dirs.push_back(unit_vec(n, i));
        face.dim = rank_of(dirs, n);
        face.bounded = face.recession_dirs.empty();
        for (size_t i = 0; i < n && !face.in_coordinate_hyperplane; ++i) {
            bool vanishes = true;
            for (size_t vid : face.vertex_ids)
                if (poly.vertices[vid][i] != 0) { vanishes = false; break; }
            if (vanishes &&
                !std::binary_search(face.recession_dirs.begin(), face.recession_dirs.end(), i))
                face.in_coordinate_hyperplane = true;
        }
        faces.push_back(std::move(face));
    }

    // Exclude any key that equals P itself (can only arise if P had no
    // proper faces recorded; with at least one facet the closure never
    // produces P, since every key is contained in some facet).
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return std::tie(a.dim, a.vertex_ids, a.recession_dirs) <
               std::tie(b.dim, b.vertex_ids, b.recession_dirs);
    });
    for (size_t i = 0; i < faces.size(); ++i) faces[i].id = static_cast<int>(i);
    return faces;
}

} // namespace bsr
