// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Everything is exact set comparison; the only tolerances are wall-clock
// budgets, which are asserted as stated.

#include "bsr/io.hpp"
#include "bsr/oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace bsr;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

MonomialIdeal ideal_of(size_t n, std::vector<std::vector<long>> rows) {
    std::vector<IntVec> gens;
    for (const auto& r : rows) {
        IntVec g;
        for (long x : r) g.push_back(Int(x));
        gens.push_back(std::move(g));
    }
    return MonomialIdeal::create(n, std::move(gens));
}

std::string describe_mismatch(const RootSet& expected, const RootSet& got) {
    std::ostringstream out;
    out << "missing:";
    for (const Rational& r : expected)
        if (!got.count(r)) out << " " << format_rational(r);
    out << " extra:";
    for (const Rational& r : got)
        if (!expected.count(r)) out << " " << format_rational(r);
    return out.str();
}

// All ideals covered by criteria 1 and 2, with their expected root sets.
std::vector<std::pair<MonomialIdeal, RootSet>> reference_cases(const std::string& corpus_path) {
    std::vector<std::pair<MonomialIdeal, RootSet>> cases;
    for (const GoldenCase& gc : load_corpus(corpus_path))
        cases.emplace_back(gc.ideal, gc.expected);
    for (long a = 2; a <= 5; ++a)
        for (long b = 2; b <= 5; ++b)
            cases.emplace_back(ideal_of(2, {{a, 1}, {1, b}}), two_gen_family(a, b));
    for (size_t n = 1; n <= 3; ++n) {
        std::vector<long> exps(n, 1);
        for (;;) {
            std::vector<std::vector<long>> gens;
            std::vector<Int> as;
            for (size_t i = 0; i < n; ++i) {
                std::vector<long> g(n, 0);
                g[i] = exps[i];
                gens.push_back(g);
                as.push_back(Int(exps[i]));
            }
            cases.emplace_back(ideal_of(n, gens), axes_family(as));
            size_t i = 0;
            while (i < n && exps[i] == 4) { exps[i] = 1; ++i; }
            if (i == n) break;
            ++exps[i];
        }
    }
    const std::pair<long, long> da[] = {{2, 1}, {2, 2}, {4, 2}, {4, 4}, {6, 3}};
    for (auto [d, a] : da)
        cases.emplace_back(ideal_of(2, {{d, 0}, {d - a, a}, {0, d}}),
                           subdivided_edge_family(d, a));
    return cases;
}

std::vector<MonomialIdeal> random_ideals(size_t count) {
    std::mt19937 rng(2024);
    std::vector<MonomialIdeal> out;
    while (out.size() < count) {
        size_t n = 1 + rng() % 3;
        size_t r = 1 + rng() % 4;
        std::vector<IntVec> gens;
        for (size_t j = 0; j < r; ++j) {
            IntVec g(n);
            bool zero = true;
            for (auto& x : g) {
                x = rng() % 7;
                if (x != 0) zero = false;
            }
            if (zero) g[rng() % n] = 1 + rng() % 6;
            gens.push_back(std::move(g));
        }
        out.push_back(MonomialIdeal::create(n, gens));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::string corpus_path = argc > 1 ? argv[1] : BSR_TEST_CORPUS;

    // 1. Golden corpus exactness, < 5 s per case.
    {
        bool ok = true;
        std::string detail;
        double worst = 0;
        for (const GoldenCase& gc : load_corpus(corpus_path)) {
            auto t0 = clock_type::now();
            RootSet got = all_roots(gc.ideal).roots;
            double dt = seconds_since(t0);
            worst = std::max(worst, dt);
            if (got != gc.expected) {
                ok = false;
                detail += gc.name + ": " + describe_mismatch(gc.expected, got) + "; ";
            }
            if (dt >= 5.0) {
                ok = false;
                detail += gc.name + ": too slow; ";
            }
        }
        std::ostringstream d;
        d << "5 cases, worst " << worst << " s";
        report(1, "golden corpus exactness", ok, ok ? d.str() : detail);
    }

    // 2. Family exactness, < 60 s total.
    {
        auto t0 = clock_type::now();
        bool ok = true;
        std::string detail;
        size_t checked = 0;
        for (long a = 2; a <= 5; ++a)
            for (long b = 2; b <= 5; ++b) {
                RootSet got = all_roots(ideal_of(2, {{a, 1}, {1, b}})).roots;
                if (got != two_gen_family(a, b)) { ok = false; detail += "two-gen; "; }
                ++checked;
            }
        for (size_t n = 1; n <= 3; ++n) {
            std::vector<long> exps(n, 1);
            for (;;) {
                std::vector<std::vector<long>> gens;
                std::vector<Int> as;
                for (size_t i = 0; i < n; ++i) {
                    std::vector<long> g(n, 0);
                    g[i] = exps[i];
                    gens.push_back(g);
                    as.push_back(Int(exps[i]));
                }
                if (all_roots(ideal_of(n, gens)).roots != axes_family(as)) {
                    ok = false;
                    detail += "axes; ";
                }
                ++checked;
                size_t i = 0;
                while (i < n && exps[i] == 4) { exps[i] = 1; ++i; }
                if (i == n) break;
                ++exps[i];
            }
        }
        const std::pair<long, long> da[] = {{2, 1}, {2, 2}, {4, 2}, {4, 4}, {6, 3}};
        for (auto [d, a] : da) {
            RootSet got = all_roots(ideal_of(2, {{d, 0}, {d - a, a}, {0, d}})).roots;
            if (got != subdivided_edge_family(d, a)) { ok = false; detail += "subdivided; "; }
            ++checked;
        }
        double dt = seconds_since(t0);
        if (dt >= 60.0) { ok = false; detail += "too slow; "; }
        std::ostringstream d;
        d << checked << " ideals in " << dt << " s";
        report(2, "family exactness", ok, ok ? d.str() : detail);
    }

    // 3. Residues of the actual roots match the facet subgroup union.
    {
        bool ok = true;
        for (const auto& [ideal, expected] : reference_cases(corpus_path)) {
            ResidueSet reduced;
            for (const Rational& r : all_roots(ideal).roots) reduced.insert(residue_mod_1(r));
            if (reduced != roots_mod_z(ideal)) ok = false;
        }
        report(3, "mod-Z classes match the facet subgroups", ok);
    }

    // 4. Facet baseline and strict negativity, reference + 30 random ideals.
    {
        bool ok = true;
        std::vector<MonomialIdeal> ideals;
        for (const auto& [ideal, expected] : reference_cases(corpus_path)) ideals.push_back(ideal);
        for (const MonomialIdeal& ideal : random_ideals(30)) ideals.push_back(ideal);
        for (const MonomialIdeal& ideal : ideals) {
            RootSet roots = all_roots(ideal).roots;
            for (const Rational& r : roots)
                if (r >= 0) ok = false;
            NewtonPolyhedron poly = build_polyhedron(ideal);
            for (const auto& [fi, m] : facet_orders(poly)) {
                Rational l_of_e = 0;
                for (const Int& c : poly.facets[fi].normal)
                    l_of_e += Rational(c, poly.facets[fi].offset);
                if (!roots.count(-l_of_e)) ok = false;
            }
        }
        std::ostringstream d;
        d << ideals.size() << " ideals";
        report(4, "facet baseline roots and negativity", ok, d.str());
    }

    // 5. Exact membership agrees with the brute-force oracle.
    {
        bool ok = true;
        size_t queries_per_ideal = 120;
        std::mt19937 rng(99);
        for (const GoldenCase& gc : load_corpus(corpus_path)) {
            NewtonPolyhedron poly = build_polyhedron(gc.ideal);
            std::vector<FaceData> fds;
            for (const Face& f : enumerate_faces(poly))
                if (f.bounded && !f.in_coordinate_hyperplane)
                    fds.push_back(compute_face_data(poly, f));
            size_t done = 0;
            while (done < queries_per_ideal) {
                const FaceData& fd = fds[rng() % fds.size()];
                IntVec u(fd.n);
                for (auto& x : u) x = rng() % 9;
                Int k = rng() % 4;
                if (in_level(fd, u, k) != brute_force_in_level(fd, u, k, 10)) ok = false;
                ++done;
            }
        }
        report(5, "membership solver agrees with brute force", ok, "120 queries x 5 ideals");
    }

    // 6. Invariance under permutation, redundancy, v0 and form choices,
    //    and candidate-bound widening.
    {
        bool ok = true;
        for (const GoldenCase& gc : load_corpus(corpus_path)) {
            RootSet base = all_roots(gc.ideal).roots;
            // variable permutation (rotate coordinates)
            std::vector<size_t> perm(gc.ideal.n);
            for (size_t i = 0; i < perm.size(); ++i) perm[i] = (i + 1) % perm.size();
            std::vector<IntVec> permuted;
            for (const IntVec& g : gc.ideal.gens) {
                IntVec p(g.size());
                for (size_t i = 0; i < g.size(); ++i) p[i] = g[perm[i]];
                permuted.push_back(std::move(p));
            }
            if (all_roots(MonomialIdeal::create(gc.ideal.n, permuted)).roots != base) ok = false;
            // redundant generator: first generator plus e
            std::vector<IntVec> padded = gc.ideal.gens;
            padded.push_back(add(padded.front(), IntVec(gc.ideal.n, 1)));
            if (all_roots(MonomialIdeal::create(gc.ideal.n, padded)).roots != base) ok = false;
            // alternative supporting forms
            EngineConfig alt;
            alt.alt_face_forms = true;
            if (all_roots(gc.ideal, alt).roots != base) ok = false;
            // alternative base points, face by face
            for (const Face& f : enumerate_faces(build_polyhedron(gc.ideal))) {
                if (!f.bounded || f.in_coordinate_hyperplane || f.dim == 0) continue;
                NewtonPolyhedron poly = build_polyhedron(gc.ideal);
                FaceData fd0 = compute_face_data(poly, f);
                RootSet fr = face_roots(fd0, {}).roots;
                for (const IntVec& w : fd0.w_points) {
                    FaceDataOptions opts;
                    opts.v0_override = w;
                    if (face_roots(compute_face_data(poly, f, opts), {}).roots != fr) ok = false;
                }
            }
            // widened candidate bound
            EngineConfig audited;
            audited.audit = true;
            RootResult r = all_roots(gc.ideal, audited);
            if (!r.audit_ran || !r.audit_stable || r.roots != base) ok = false;
        }
        report(6, "invariance suite", ok);
    }

    // 7. Same polyhedron, same residues, different roots.
    {
        MonomialIdeal subdivided = ideal_of(2, {{4, 0}, {2, 2}, {0, 4}});
        MonomialIdeal plain = ideal_of(2, {{4, 0}, {0, 4}});
        bool ok = roots_mod_z(subdivided) == roots_mod_z(plain) &&
                  all_roots(subdivided).roots != all_roots(plain).roots;
        report(7, "mod-Z classes depend only on the polyhedron", ok);
    }

    // 8. Four-variable smoke test under 120 s with a stable audit.
    {
        auto t0 = clock_type::now();
        MonomialIdeal ideal = ideal_of(
            4, {{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 7}, {1, 1, 1, 2}});
        EngineConfig audited;
        audited.audit = true;
        RootResult r = all_roots(ideal, audited);
        bool ok = r.audit_ran && r.audit_stable;
        for (const Rational& root : r.roots)
            if (root >= 0) ok = false;
        ResidueSet reduced;
        for (const Rational& root : r.roots) reduced.insert(residue_mod_1(root));
        if (reduced != roots_mod_z(ideal)) ok = false;
        NewtonPolyhedron poly = build_polyhedron(ideal);
        for (const auto& [fi, m] : facet_orders(poly)) {
            Rational l_of_e = 0;
            for (const Int& c : poly.facets[fi].normal)
                l_of_e += Rational(c, poly.facets[fi].offset);
            if (!r.roots.count(-l_of_e)) ok = false;
        }
        double dt = seconds_since(t0);
        if (dt >= 120.0) ok = false;
        std::ostringstream d;
        d << r.roots.size() << " roots in " << dt << " s";
        report(8, "four-variable smoke test", ok, d.str());
    }

    // 9. Generator export is syntax only; counts must match brute force.
    {
        bool ok = true;
        IdealDocument doc;
        doc.n = 2;
        doc.rows = {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)}, IntVec{Int(1), Int(1)}};
        for (long b = 1; b <= 3; ++b) {
            size_t count = 0;
            std::vector<long> c(doc.rows.size(), 0);
            std::function<void(size_t, long)> rec = [&](size_t j, long sum) {
                if (j == c.size()) {
                    if (sum == 1) ++count;
                    return;
                }
                for (long x = -b; x <= b; ++x) rec(j + 1, sum + x);
            };
            rec(0, 0);
            if (export_generators(doc, b, 100000).records.size() != count) ok = false;
        }
        report(9, "generator export counts", ok);
    }

    if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
    else std::cout << "all criteria passed" << std::endl;
    return failures ? 1 : 0;
}
