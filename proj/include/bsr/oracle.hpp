#pragma once

// Closed-form root sets for three ideal families, plus a small corpus of
// worked cases with known root sets, shipped as a data file and used as
// ground truth by the tests and the `verify` subcommand.

#include "bsr/engine.hpp"

#include <string>
#include <vector>

namespace bsr {

struct GoldenCase {
    std::string name;
    MonomialIdeal ideal;
    RootSet expected;
};

// (x^a y, x y^b), a, b >= 2:
// { -((b-1)i + (a-1)j)/(ab-1) : 1 <= i <= a, 1 <= j <= b } plus -1.
RootSet two_gen_family(const Int& a, const Int& b);

// (x_1^{a_1}, ..., x_n^{a_n}): { -(p_1/a_1 + ... + p_n/a_n) : 1 <= p_i <= a_i }.
RootSet axes_family(const std::vector<Int>& exponents);

// (x^d, x^{d-a} y^a, y^d) with d >= 2, a | d: { -k/d : 2 <= k <= d + a }.
RootSet subdivided_edge_family(const Int& d, const Int& a);

// Parse the corpus data file (JSON; see README for the schema).
std::vector<GoldenCase> load_corpus(const std::string& path);

std::string default_corpus_path();

} // namespace bsr
