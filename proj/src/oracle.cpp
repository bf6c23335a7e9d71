#include "bsr/oracle.hpp"

#include <json.hpp>

#include <fstream>

#ifndef BSR_CORPUS_PATH
#define BSR_CORPUS_PATH "data/golden_corpus.json"
#endif

namespace bsr {

RootSet two_gen_family(const Int& a, const Int& b) {
    if (a < 2 || b < 2) throw InputError("two_gen_family: needs a, b >= 2");
    RootSet roots;
    Int d = a * b - 1;
    for (Int i = 1; i <= a; ++i)
        for (Int j = 1; j <= b; ++j)
            roots.insert(Rational(-((b - 1) * i + (a - 1) * j), d));
    roots.insert(Rational(-1));
    return roots;
}

RootSet axes_family(const std::vector<Int>& exponents) {
    if (exponents.empty()) throw InputError("axes_family: empty exponent list");
    for (const Int& a : exponents)
        if (a < 1) throw InputError("axes_family: exponents must be positive");
    RootSet roots;
    std::vector<Int> p(exponents.size(), 1);
    for (;;) {
        Rational sum = 0;
        for (size_t i = 0; i < p.size(); ++i) sum += Rational(p[i], exponents[i]);
        roots.insert(-sum);
        size_t i = 0;
        while (i < p.size() && p[i] == exponents[i]) { p[i] = 1; ++i; }
        if (i == p.size()) break;
        ++p[i];
    }
    return roots;
}

RootSet subdivided_edge_family(const Int& d, const Int& a) {
    if (d < 2 || a < 1 || d % a != 0)
        throw InputError("subdivided_edge_family: needs d >= 2 and a | d");
    RootSet roots;
    for (Int k = 2; k <= d + a; ++k) roots.insert(Rational(-k, d));
    return roots;
}

std::vector<GoldenCase> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("corpus file " + path + ": " + e.what());
    }
    std::vector<GoldenCase> cases;
    for (const auto& c : doc.at("cases")) {
        GoldenCase gc;
        gc.name = c.at("name").get<std::string>();
        size_t n = c.at("vars").get<size_t>();
        std::vector<IntVec> gens;
        for (const auto& row : c.at("generators")) {
            IntVec g;
            for (const auto& e : row) g.push_back(Int(e.get<long long>()));
            gens.push_back(std::move(g));
        }
        gc.ideal = MonomialIdeal::create(n, std::move(gens));
        for (const auto& r : c.at("roots"))
            gc.expected.insert(parse_rational(r.get<std::string>()));
        cases.push_back(std::move(gc));
    }
    return cases;
}

std::string default_corpus_path() { return BSR_CORPUS_PATH; }

} // namespace bsr
