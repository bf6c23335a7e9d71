#include "bsr/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace bsr {

namespace {

IdealDocument parse_json_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("JSON input: ") + e.what());
    }
    IdealDocument out;
    try {
        if (doc.contains("name")) out.name = doc.at("name").get<std::string>();
        out.n = doc.at("vars").get<size_t>();
        for (const auto& row : doc.at("generators")) {
            IntVec g;
            for (const auto& e : row) {
                long long v = e.get<long long>();
                if (v < 0) throw InputError("JSON input: negative exponent");
                g.push_back(Int(v));
            }
            out.rows.push_back(std::move(g));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("JSON input: ") + e.what());
    }
    return out;
}

void finish_document(IdealDocument& doc, std::vector<std::string>* warnings) {
    if (doc.n == 0) throw InputError("input: variable count must be positive");
    if (doc.rows.empty()) throw InputError("input: zero ideal not allowed");
    std::vector<IntVec> unique_rows;
    for (size_t r = 0; r < doc.rows.size(); ++r) {
        if (doc.rows[r].size() != doc.n)
            throw InputError("input: generator " + std::to_string(r + 1) + " has " +
                             std::to_string(doc.rows[r].size()) + " entries, expected " +
                             std::to_string(doc.n));
        if (std::find(unique_rows.begin(), unique_rows.end(), doc.rows[r]) != unique_rows.end()) {
            if (warnings)
                warnings->push_back("duplicate generator " + format_int_vec(doc.rows[r]) +
                                    " ignored");
            continue;
        }
        unique_rows.push_back(doc.rows[r]);
    }
    doc.rows = std::move(unique_rows);
}

} // namespace

IdealDocument parse_ideal(const std::string& text, std::vector<std::string>* warnings) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InputError("input: empty document");
    if (text[first] == '{') {
        IdealDocument doc = parse_json_document(text);
        finish_document(doc, warnings);
        return doc;
    }

    IdealDocument doc;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;       // blank line
        if (tok[0] == '#') continue;      // comment
        if (!header_seen) {
            if (tok != "n")
                throw InputError("line " + std::to_string(lineno) +
                                 ": expected header 'n <dim>'");
            long dim = 0;
            if (!(ls >> dim) || dim <= 0)
                throw InputError("line " + std::to_string(lineno) +
                                 ": expected a positive dimension after 'n'");
            doc.n = static_cast<size_t>(dim);
            header_seen = true;
            continue;
        }
        IntVec row;
        do {
            long long v;
            try {
                size_t used = 0;
                v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw InputError("line " + std::to_string(lineno) + ": bad integer '" + tok +
                                 "'");
            }
            if (v < 0)
                throw InputError("line " + std::to_string(lineno) + ": negative exponent " +
                                 tok);
            row.push_back(Int(v));
        } while (ls >> tok);
        if (row.size() != doc.n)
            throw InputError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(doc.n) + " exponents, got " +
                             std::to_string(row.size()));
        doc.rows.push_back(std::move(row));
    }
    if (!header_seen) throw InputError("input: missing 'n <dim>' header");
    finish_document(doc, warnings);
    return doc;
}

std::string format_ideal(const IdealDocument& doc) {
    std::string out;
    if (!doc.name.empty()) out += "# " + doc.name + "\n";
    out += "n " + std::to_string(doc.n) + "\n";
    for (const IntVec& row : doc.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += " ";
            out += row[i].str();
        }
        out += "\n";
    }
    return out;
}

namespace {

std::string binomial_text(const std::string& top, const Int& k) {
    return "binomial(" + top + "," + k.str() + ")";
}

std::string linear_form_text(const std::vector<IntVec>& rows, size_t i, size_t r) {
    // l_i(s) = sum_j a_{i,j} s_j, printed with explicit coefficients
    std::string s;
    for (size_t j = 0; j < r; ++j) {
        const Int& a = rows[j][i];
        if (a == 0) continue;
        if (!s.empty()) s += "+";
        if (a != 1) s += a.str() + "*";
        s += "s" + std::to_string(j + 1);
    }
    return s.empty() ? "0" : s;
}

} // namespace

GeneratorExport export_generators(const IdealDocument& doc, long c_bound, size_t limit) {
    if (c_bound < 1) throw InputError("export: c_bound must be >= 1");
    const size_t r = doc.rows.size();
    const size_t n = doc.n;

    GeneratorExport exp;
    exp.c_bound = static_cast<size_t>(c_bound);

    IntVec c(r, -c_bound);
    std::function<void(size_t, Int)> rec = [&](size_t j, Int sum) {
        // remaining entries range over [-c_bound, c_bound] each
        Int slack = Int(c_bound) * Int(r - j);
        if (sum - slack > 1 || sum + slack < 1) return;
        if (j == r) {
            if (sum != 1) return;
            if (exp.records.size() >= limit)
                throw InputError("export: more than " + std::to_string(limit) +
                                 " index vectors; raise the limit or lower c_bound");
            GeneratorRecord rec_out;
            rec_out.c = c;
            std::string text;
            for (size_t t = 0; t < r; ++t) {
                if (c[t] >= 0) continue;
                if (!text.empty()) text += "*";
                text += binomial_text("s" + std::to_string(t + 1), -c[t]);
            }
            for (size_t i = 0; i < n; ++i) {
                Int li = 0;
                for (size_t t = 0; t < r; ++t) li += doc.rows[t][i] * c[t];
                if (li <= 0) continue;
                if (!text.empty()) text += "*";
                text += binomial_text(linear_form_text(doc.rows, i, r) + "+" + li.str(), li);
            }
            if (text.empty()) text = "1";
            rec_out.text = std::move(text);
            exp.records.push_back(std::move(rec_out));
            return;
        }
        for (c[j] = -c_bound; c[j] <= c_bound; ++c[j]) rec(j + 1, sum + c[j]);
        c[j] = -c_bound;
    };
    rec(0, Int(0));
    return exp;
}

std::string render_roots_text(const IdealDocument& doc, const RootResult& result,
                              bool breakdown) {
    std::ostringstream out;
    out << "ideal: " << (doc.name.empty() ? "(unnamed)" : doc.name) << " n=" << doc.n
        << " generators=" << doc.rows.size() << "\n";
    out << "roots (" << result.roots.size() << "):\n";
    for (auto it = result.roots.rbegin(); it != result.roots.rend(); ++it)
        out << format_rational(*it) << "\n";
    if (result.audit_ran)
        out << "audit: " << (result.audit_stable ? "stable" : "UNSTABLE (bound widened)")
            << "\n";
    if (breakdown) {
        for (const FaceContribution& fc : result.contributions) {
            out << "face " << fc.face_id;
            if (!fc.ideal_label.empty()) out << " of projection " << fc.ideal_label;
            out << ": L=" << format_q_vec(fc.l_form) << "\n";
            for (const auto& [k, members] : fc.levels) {
                out << "  level " << k << ":";
                for (const IntVec& u : members) out << " " << format_int_vec(u);
                out << "\n";
            }
            out << "  roots:";
            for (auto it = fc.roots.rbegin(); it != fc.roots.rend(); ++it)
                out << " " << format_rational(*it);
            out << "\n";
        }
    }
    return out.str();
}

std::string render_faces_text(const IdealDocument& doc, const NewtonPolyhedron& poly,
                              const std::vector<Face>& faces) {
    std::ostringstream out;
    out << "ideal: " << (doc.name.empty() ? "(unnamed)" : doc.name) << " n=" << doc.n
        << " generators=" << doc.rows.size() << "\n";
    out << "vertices (" << poly.vertices.size() << "):";
    for (const IntVec& v : poly.vertices) out << " " << format_int_vec(v);
    out << "\nfacets (" << poly.facets.size() << "):\n";
    for (size_t fi = 0; fi < poly.facets.size(); ++fi) {
        const Facet& f = poly.facets[fi];
        out << "  facet " << fi << ": normal=" << format_int_vec(f.normal)
            << " offset=" << f.offset.str() << (f.coordinate ? " coordinate" : "") << "\n";
    }
    out << "faces (" << faces.size() << "):\n";
    for (const Face& face : faces) {
        out << "  face " << face.id << ": dim=" << face.dim
            << (face.bounded ? " bounded" : " unbounded");
        if (face.in_coordinate_hyperplane) out << " coordinate-hyperplane";
        out << " vertices=[";
        for (size_t k = 0; k < face.vertex_ids.size(); ++k) {
            if (k) out << ",";
            out << format_int_vec(poly.vertices[face.vertex_ids[k]]);
        }
        out << "] facets={";
        for (size_t k = 0; k < face.incident_facets.size(); ++k) {
            if (k) out << ",";
            out << face.incident_facets[k];
        }
        out << "}";
        if (!face.recession_dirs.empty()) {
            out << " recession={";
            for (size_t k = 0; k < face.recession_dirs.size(); ++k) {
                if (k) out << ",";
                out << "x" << face.recession_dirs[k] + 1;
            }
            out << "}";
        }
        out << "\n";
    }
    return out.str();
}

std::string render_modz_text(const IdealDocument& doc, const NewtonPolyhedron& poly,
                             const ResidueSet& residues) {
    std::ostringstream out;
    out << "ideal: " << (doc.name.empty() ? "(unnamed)" : doc.name) << " n=" << doc.n
        << " generators=" << doc.rows.size() << "\n";
    for (const auto& [fi, m] : facet_orders(poly))
        out << "facet " << fi << ": normal=" << format_int_vec(poly.facets[fi].normal)
            << " offset=" << poly.facets[fi].offset.str() << " m=" << m.str() << "\n";
    out << "residues (" << residues.size() << "):";
    for (const Rational& q : residues) out << " " << format_rational(q);
    out << "\n";
    return out.str();
}

std::string render_export_text(const GeneratorExport& exp) {
    std::ostringstream out;
    out << "generators (" << exp.records.size() << "), coefficient bound " << exp.c_bound
        << ":\n";
    for (const GeneratorRecord& rec : exp.records)
        out << "c=" << format_int_vec(rec.c) << "  g=" << rec.text << "\n";
    return out.str();
}

std::string render_structured(const IdealDocument& doc, const RootResult& result,
                              const NewtonPolyhedron& poly, const std::vector<Face>& faces,
                              const ResidueSet& residues, const EngineConfig& cfg) {
    nlohmann::ordered_json j;
    j["name"] = doc.name;
    j["n"] = doc.n;
    auto vec_to_json = [](const IntVec& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const Int& x : v) a.push_back(x.str());
        return a;
    };
    j["generators"] = nlohmann::ordered_json::array();
    for (const IntVec& row : doc.rows) j["generators"].push_back(vec_to_json(row));

    j["roots"] = nlohmann::ordered_json::array();
    for (auto it = result.roots.rbegin(); it != result.roots.rend(); ++it)
        j["roots"].push_back({{"num", num(*it).str()}, {"den", den(*it).str()}});

    j["faces"] = nlohmann::ordered_json::array();
    for (const Face& face : faces) {
        nlohmann::ordered_json f;
        f["id"] = face.id;
        f["dim"] = face.dim;
        f["bounded"] = face.bounded;
        f["coordinate_hyperplane"] = face.in_coordinate_hyperplane;
        f["vertices"] = nlohmann::ordered_json::array();
        for (size_t vid : face.vertex_ids) f["vertices"].push_back(vec_to_json(poly.vertices[vid]));
        f["incident_facets"] = face.incident_facets;
        f["recession_dirs"] = nlohmann::ordered_json::array();
        for (size_t i : face.recession_dirs) f["recession_dirs"].push_back(i + 1);
        j["faces"].push_back(std::move(f));
    }

    j["residues"] = nlohmann::ordered_json::array();
    for (const Rational& q : residues)
        j["residues"].push_back({{"num", num(q).str()}, {"den", den(q).str()}});

    j["audit"] = {{"caps", cfg.brute_cap},
                  {"l_bound", effective_l_bound(doc.n, cfg).str()},
                  {"stable", result.audit_ran ? nlohmann::ordered_json(result.audit_stable)
                                              : nlohmann::ordered_json(nullptr)}};
    return j.dump(2) + "\n";
}

} // namespace bsr
