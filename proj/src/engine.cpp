#include "bsr/engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bsr {

Int effective_l_bound(size_t n, const EngineConfig& cfg) {
    Int b = Int(2 * n) + cfg.l_bound_shift;
    if (b < Int(n)) b = Int(n);
    return b;
}

std::vector<IntVec> candidates(const FaceData& fd, const EngineConfig& cfg) {
    if (!fd.face.bounded)
        throw InputError("candidates: face must be bounded");
    const size_t n = fd.n;
    const Rational bound = effective_l_bound(n, cfg);

    std::vector<IntVec> out;
    IntVec zero(n, 0);
    IntVec u(n, 1);

    // Depth-first over coordinates. The partial form value only grows
    // (coefficients are strictly positive on a bounded face), so each
    // coordinate ranges over a finite interval.
    std::function<void(size_t, Rational)> rec = [&](size_t i, Rational partial) {
        if (i == n) {
            if (!fd.in_span(u)) return;
            // dominated by a coset point: some g in v0 + G_Q with
            // 0 <= g <= u - e already accounts for this candidate
            IntVec hi = sub(u, IntVec(n, 1));
            if (fd.w_lattice.meets_box(fd.v0, zero, hi)) return;
            out.push_back(u);
            return;
        }
        // remaining coordinates contribute at least their value at 1
        Rational rest = 0;
        for (size_t j = i + 1; j < n; ++j) rest += fd.l_form[j];
        for (u[i] = 1;; ++u[i]) {
            Rational here = partial + fd.l_form[i] * u[i];
            if (here + rest > bound) break;
            rec(i + 1, here);
        }
        u[i] = 1;
    };
    rec(0, Rational(0));
    return out;
}

FaceContribution face_roots(const FaceData& fd, const EngineConfig& cfg) {
    FaceContribution contrib;
    contrib.face_id = fd.face.id;
    contrib.l_form = fd.l_form;

    for (const IntVec& u : candidates(fd, cfg)) {
        Rational lu = fd.l_value(u);
        Int k_max = rational_ceil(lu) - 1; // last level with a negative root
        std::optional<Int> k = level_of(fd, u, k_max);
        if (!k) continue;
        if (*k == k_max && in_level(fd, u, k_max + 1))
            throw std::logic_error("face_roots: candidate level reaches a nonnegative shift");
        Rational root = *k - lu;
        if (root >= 0)
            throw std::logic_error("face_roots: nonnegative root");
        contrib.levels[*k].push_back(u);
        contrib.roots.insert(root);
    }
    return contrib;
}

namespace {

void collect(const MonomialIdeal& ideal, const EngineConfig& cfg, const std::string& label,
             RootSet& roots, std::vector<FaceContribution>* contributions) {
    if (ideal.unit) return;
    NewtonPolyhedron poly = build_polyhedron(ideal);
    std::vector<Face> faces = enumerate_faces(poly);

    std::set<size_t> projection_dirs;
    for (const Face& face : faces)
        for (size_t i : face.recession_dirs) projection_dirs.insert(i);

    for (const Face& face : faces) {
        if (face.in_coordinate_hyperplane) continue;
        if (!face.bounded) continue; // reached through a projection below
        if (face.dim == 0 && ideal.n >= 2 && !cfg.include_vertices) continue;
        FaceDataOptions opts;
        if (cfg.alt_face_forms) {
            size_t count = face.incident_facets.size();
            for (size_t k = 0; k < count; ++k) opts.facet_weights.push_back(Int(k + 1));
        }
        FaceData fd = compute_face_data(poly, face, opts);
        FaceContribution contrib = face_roots(fd, cfg);
        contrib.ideal_label = label;
        roots.insert(contrib.roots.begin(), contrib.roots.end());
        if (contributions) contributions->push_back(std::move(contrib));
    }

    for (size_t i : projection_dirs)
        collect(ideal.project(i), cfg, label + "/drop" + std::to_string(i + 1), roots,
                contributions);
}

} // namespace

RootResult all_roots(const MonomialIdeal& ideal, const EngineConfig& cfg) {
    RootResult result;
    collect(ideal, cfg, "", result.roots, &result.contributions);
    if (cfg.audit) {
        EngineConfig widened = cfg;
        widened.audit = false;
        widened.l_bound_shift = cfg.l_bound_shift + 2;
        RootSet wide;
        collect(ideal, widened, "", wide, nullptr);
        result.audit_ran = true;
        result.audit_stable = (wide == result.roots);
        if (!result.audit_stable) result.roots = std::move(wide);
    }
    if (!ideal.unit && result.roots.empty())
        throw std::logic_error("all_roots: nonunit ideal with empty root set");
    return result;
}

std::vector<std::pair<size_t, Int>> facet_orders(const NewtonPolyhedron& poly) {
    std::vector<std::pair<size_t, Int>> orders;
    for (size_t fi = 0; fi < poly.facets.size(); ++fi) {
        const Facet& f = poly.facets[fi];
        if (f.coordinate) continue;
        QVec form(poly.ideal.n);
        for (size_t i = 0; i < poly.ideal.n; ++i) form[i] = Rational(f.normal[i], f.offset);
        orders.emplace_back(fi, lcm_of_denominators(form));
    }
    return orders;
}

ResidueSet roots_mod_z(const MonomialIdeal& ideal) {
    ResidueSet classes;
    if (ideal.unit) return classes;
    NewtonPolyhedron poly = build_polyhedron(ideal);
    for (const auto& [fi, m] : facet_orders(poly))
        for (Int j = 0; j < m; ++j) classes.insert(Rational(j, m));
    return classes;
}

RootSet n2_unbounded_edge_roots(const Int& a) {
    RootSet roots;
    for (Int k = 1; k <= a; ++k) roots.insert(Rational(-k, a));
    return roots;
}

Rational residue_mod_1(const Rational& r) { return r - rational_floor(r); }

} // namespace bsr
