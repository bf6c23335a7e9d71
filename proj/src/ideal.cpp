#include "bsr/ideal.hpp"

#include <algorithm>

namespace bsr {

MonomialIdeal MonomialIdeal::create(size_t n, std::vector<IntVec> generators) {
    if (n == 0) throw InputError("MonomialIdeal: need at least one variable");
    if (generators.empty()) throw InputError("MonomialIdeal: zero ideal not allowed");
    for (const IntVec& g : generators) {
        if (g.size() != n) throw InputError("MonomialIdeal: generator length mismatch");
        for (const Int& e : g)
            if (e < 0) throw InputError("MonomialIdeal: negative exponent");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    MonomialIdeal ideal;
    ideal.n = n;
    ideal.gens = std::move(generators);
    ideal.unit = is_zero_vec(ideal.gens.front());
    return ideal;
}

bool MonomialIdeal::gamma_contains(const IntVec& u) const {
    for (const IntVec& g : gens)
        if (leq_componentwise(g, u)) return true;
    return false;
}

MonomialIdeal MonomialIdeal::project(size_t drop) const {
    if (n < 2) throw InputError("MonomialIdeal::project: needs n >= 2");
    if (drop >= n) throw InputError("MonomialIdeal::project: bad coordinate");
    std::vector<IntVec> projected;
    projected.reserve(gens.size());
    for (const IntVec& g : gens) {
        IntVec q;
        q.reserve(n - 1);
        for (size_t i = 0; i < n; ++i)
            if (i != drop) q.push_back(g[i]);
        projected.push_back(std::move(q));
    }
    return create(n - 1, std::move(projected));
}

} // namespace bsr
