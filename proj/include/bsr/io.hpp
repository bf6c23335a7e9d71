#pragma once

// Input documents, report rendering, and the symbolic generator export.
// Two input formats: a plain text one ("n <dim>" header, one exponent row
// per line) and a JSON one ({"vars": n, "generators": [[..]], "name": ..}).

#include "bsr/engine.hpp"
#include "bsr/newton.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bsr {

struct IdealDocument {
    std::string name;            // optional
    size_t n = 0;
    std::vector<IntVec> rows;    // generator order as given (deduplicated)

    MonomialIdeal ideal() const { return MonomialIdeal::create(n, rows); }
};

// Throws InputError with a line number on malformed input. Duplicate rows
// are dropped; each drop is reported through `warnings` when given.
IdealDocument parse_ideal(const std::string& text, std::vector<std::string>* warnings = nullptr);

// Text form that parse_ideal reads back (round-trips exactly).
std::string format_ideal(const IdealDocument& doc);

// One symbolic generator of the annihilating ideal in the s-variables:
// the product of binomial(s_j, -c_j) over j with c_j < 0 and of
// binomial(l_i(s) + l_i(c), l_i(c)) over i with l_i(c) > 0, where
// l_i(s) = sum_j a_{i,j} s_j.
struct GeneratorRecord {
    IntVec c;           // integer vector with sum 1
    std::string text;   // e.g. "binomial(s2,1)*binomial(3*s1+2*s2+2,2)"
};

struct GeneratorExport {
    size_t c_bound = 0;
    std::vector<GeneratorRecord> records;
};

// All c in Z^r with sum(c) = 1 and |c_j| <= c_bound, in lexicographic
// order. Refuses (InputError) when the count would exceed `limit`.
GeneratorExport export_generators(const IdealDocument& doc, long c_bound, size_t limit = 10000);

// Report rendering (deterministic; roots printed in descending order).
std::string render_roots_text(const IdealDocument& doc, const RootResult& result,
                              bool breakdown);
std::string render_faces_text(const IdealDocument& doc, const NewtonPolyhedron& poly,
                              const std::vector<Face>& faces);
std::string render_modz_text(const IdealDocument& doc, const NewtonPolyhedron& poly,
                             const ResidueSet& residues);
std::string render_export_text(const GeneratorExport& exp);

// The single structured document: {name, n, generators, roots, faces,
// residues, audit}. `audit.stable` is null unless an audit ran.
std::string render_structured(const IdealDocument& doc, const RootResult& result,
                              const NewtonPolyhedron& poly, const std::vector<Face>& faces,
                              const ResidueSet& residues, const EngineConfig& cfg);

} // namespace bsr
