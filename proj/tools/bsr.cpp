// bsr: root sets of Bernstein-Sato polynomials of monomial ideals.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 reserved (solver instability; the shipped solver is exact and never
// raises it), 4 internal error.

#include "bsr/io.hpp"
#include "bsr/oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw bsr::InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bsr::IdealDocument load_document(const std::string& path) {
    std::vector<std::string> warnings;
    bsr::IdealDocument doc = bsr::parse_ideal(read_input(path), &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    return doc;
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "text";
    int l_bound = 0; // 0: default 2n
    int cap = 20;
    bool audit = false;
    bool include_vertices = false;
    bool breakdown = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool engine_flags) {
    cmd->add_option("input", opts.input, "ideal file ('-' for stdin)");
    cmd->add_option("--format", opts.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    if (engine_flags) {
        cmd->add_option("--l-bound", opts.l_bound,
                        "candidate bound on L_Q(u) for the input ideal (default 2n)");
        cmd->add_option("--cap", opts.cap, "coefficient bound for the brute-force cross-check");
        cmd->add_flag("--audit", opts.audit, "recompute with a widened bound and compare");
        cmd->add_flag("--include-vertices", opts.include_vertices,
                      "also process 0-dimensional faces (adds no roots)");
        cmd->add_flag("--breakdown", opts.breakdown, "per-face candidate/level report");
    }
}

bsr::EngineConfig make_config(const CommonOpts& opts, size_t n) {
    bsr::EngineConfig cfg;
    if (opts.l_bound != 0) cfg.l_bound_shift = opts.l_bound - static_cast<int>(2 * n);
    cfg.brute_cap = opts.cap;
    cfg.audit = opts.audit;
    cfg.include_vertices = opts.include_vertices;
    return cfg;
}

int run_full(const CommonOpts& opts, const std::string& mode) {
    bsr::IdealDocument doc = load_document(opts.input);
    bsr::MonomialIdeal ideal = doc.ideal();
    bsr::EngineConfig cfg = make_config(opts, doc.n);

    bsr::NewtonPolyhedron poly = bsr::build_polyhedron(ideal);
    std::vector<bsr::Face> faces = bsr::enumerate_faces(poly);

    if (opts.format == "structured") {
        bsr::RootResult result = bsr::all_roots(ideal, cfg);
        bsr::ResidueSet residues = bsr::roots_mod_z(ideal);
        std::cout << bsr::render_structured(doc, result, poly, faces, residues, cfg);
        return 0;
    }
    if (mode == "roots") {
        bsr::RootResult result = bsr::all_roots(ideal, cfg);
        std::cout << bsr::render_roots_text(doc, result, opts.breakdown);
    } else if (mode == "faces") {
        std::cout << bsr::render_faces_text(doc, poly, faces);
    } else { // modz
        std::cout << bsr::render_modz_text(doc, poly, bsr::roots_mod_z(ideal));
    }
    return 0;
}

int run_verify(const std::string& corpus_path, int cap) {
    using clock = std::chrono::steady_clock;
    bsr::EngineConfig cfg;
    cfg.brute_cap = cap;
    size_t failed = 0, golden_total = 0, golden_ok = 0, family_total = 0, family_ok = 0;

    auto check = [&](const std::string& name, const bsr::MonomialIdeal& ideal,
                     const bsr::RootSet& expected, bool golden) {
        auto t0 = clock::now();
        bsr::RootSet got = bsr::all_roots(ideal, cfg).roots;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0);
        bool ok = (got == expected);
        (golden ? golden_total : family_total) += 1;
        if (ok) (golden ? golden_ok : family_ok) += 1;
        if (!ok) ++failed;
        std::cout << (ok ? "pass" : "FAIL") << " " << name << " (" << ms.count() << " ms)";
        if (!ok) {
            std::cout << "\n  expected:";
            for (auto it = expected.rbegin(); it != expected.rend(); ++it)
                std::cout << " " << bsr::format_rational(*it);
            std::cout << "\n  got:     ";
            for (auto it = got.rbegin(); it != got.rend(); ++it)
                std::cout << " " << bsr::format_rational(*it);
        }
        std::cout << "\n";
    };

    std::vector<bsr::GoldenCase> corpus = bsr::load_corpus(corpus_path);
    for (const bsr::GoldenCase& gc : corpus) check(gc.name, gc.ideal, gc.expected, true);

    // membership cross-check: exact solver vs exhaustive search at --cap
    {
        std::mt19937 rng(12345);
        size_t disagreements = 0, queries = 0;
        for (const bsr::GoldenCase& gc : corpus) {
            bsr::NewtonPolyhedron poly = bsr::build_polyhedron(gc.ideal);
            std::vector<bsr::FaceData> fds;
            for (const bsr::Face& f : bsr::enumerate_faces(poly))
                if (f.bounded && !f.in_coordinate_hyperplane)
                    fds.push_back(bsr::compute_face_data(poly, f));
            for (int trial = 0; trial < 40; ++trial) {
                const bsr::FaceData& fd = fds[rng() % fds.size()];
                bsr::IntVec u(fd.n);
                for (auto& x : u) x = rng() % 9;
                bsr::Int k = rng() % 3;
                if (bsr::in_level(fd, u, k) != bsr::brute_force_in_level(fd, u, k, cap))
                    ++disagreements;
                ++queries;
            }
        }
        bool ok = disagreements == 0;
        if (!ok) ++failed;
        std::cout << (ok ? "pass" : "FAIL") << " membership cross-check (" << queries
                  << " queries, cap " << cap << ")\n";
    }

    for (bsr::Int a = 2; a <= 5; ++a)
        for (bsr::Int b = 2; b <= 5; ++b) {
            std::vector<bsr::IntVec> gens = {{a, bsr::Int(1)}, {bsr::Int(1), b}};
            check("two-gen a=" + a.str() + " b=" + b.str(),
                  bsr::MonomialIdeal::create(2, gens), bsr::two_gen_family(a, b), false);
        }
    for (size_t n = 1; n <= 3; ++n) {
        std::vector<bsr::Int> exps(n, 1);
        for (;;) {
            std::vector<bsr::IntVec> gens;
            for (size_t i = 0; i < n; ++i) {
                bsr::IntVec g(n, 0);
                g[i] = exps[i];
                gens.push_back(g);
            }
            std::string label = "axes";
            for (const bsr::Int& a : exps) label += " " + a.str();
            check(label, bsr::MonomialIdeal::create(n, gens), bsr::axes_family(exps), false);
            size_t i = 0;
            while (i < n && exps[i] == 4) { exps[i] = 1; ++i; }
            if (i == n) break;
            ++exps[i];
        }
    }
    const std::pair<int, int> pairs[] = {{2, 1}, {2, 2}, {4, 2}, {4, 4}, {6, 3}};
    for (auto [d, a] : pairs) {
        std::vector<bsr::IntVec> gens = {{bsr::Int(d), bsr::Int(0)},
                                         {bsr::Int(d - a), bsr::Int(a)},
                                         {bsr::Int(0), bsr::Int(d)}};
        check("subdivided-edge d=" + std::to_string(d) + " a=" + std::to_string(a),
              bsr::MonomialIdeal::create(2, gens), bsr::subdivided_edge_family(d, a), false);
    }

    if (failed == 0 && golden_ok == golden_total && family_ok == family_total)
        std::cout << "summary: " << golden_ok << "/" << golden_total
                  << " golden, all families pass\n";
    else
        std::cout << "summary: " << golden_ok << "/" << golden_total << " golden, "
                  << family_ok << "/" << family_total << " families, " << failed
                  << " failures\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"root sets of Bernstein-Sato polynomials of monomial ideals"};
    app.require_subcommand(1);

    CommonOpts roots_opts, faces_opts, modz_opts;
    CLI::App* roots = app.add_subcommand("roots", "compute the exact root set");
    add_common(roots, roots_opts, true);
    CLI::App* faces = app.add_subcommand("faces", "print the Newton polyhedron face lattice");
    add_common(faces, faces_opts, false);
    CLI::App* modz = app.add_subcommand("modz", "root classes mod Z and facet orders");
    add_common(modz, modz_opts, false);

    std::string corpus = bsr::default_corpus_path();
    int verify_cap = 20;
    CLI::App* verify = app.add_subcommand("verify", "run the bundled ground-truth suite");
    verify->add_option("--corpus", corpus, "corpus file path");
    verify->add_option("--cap", verify_cap, "brute-force coefficient bound");

    CommonOpts export_opts;
    long c_bound = 1;
    long export_limit = 10000;
    CLI::App* exp = app.add_subcommand("export-gens",
                                       "emit symbolic annihilator generators (syntax only)");
    exp->add_option("input", export_opts.input, "ideal file ('-' for stdin)");
    exp->add_option("--c-bound", c_bound, "max |c_j| in the index vectors")->required();
    exp->add_option("--limit", export_limit, "refuse above this many index vectors");

    CLI11_PARSE(app, argc, argv);

    try {
        if (roots->parsed()) return run_full(roots_opts, "roots");
        if (faces->parsed()) return run_full(faces_opts, "faces");
        if (modz->parsed()) return run_full(modz_opts, "modz");
        if (verify->parsed()) return run_verify(corpus, verify_cap);
        if (exp->parsed()) {
            bsr::IdealDocument doc = load_document(export_opts.input);
            std::cout << bsr::render_export_text(
                bsr::export_generators(doc, c_bound, static_cast<size_t>(export_limit)));
            return 0;
        }
    } catch (const bsr::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
