#include <doctest.h>

#include "bsr/oracle.hpp"

using namespace bsr;

namespace {

RootSet parse_roots(std::initializer_list<const char*> xs) {
    RootSet s;
    for (const char* x : xs) s.insert(parse_rational(x));
    return s;
}

} // namespace

TEST_CASE("two generator family values") {
    CHECK(two_gen_family(2, 3) == parse_roots({"-3/5", "-4/5", "-1", "-6/5", "-7/5"}));
    CHECK(two_gen_family(2, 2) == parse_roots({"-2/3", "-1", "-4/3"}));
    CHECK(two_gen_family(3, 4) == two_gen_family(4, 3));
    CHECK_THROWS_AS(two_gen_family(1, 3), InputError);
}

TEST_CASE("axes family values") {
    CHECK(axes_family({Int(4)}) == parse_roots({"-1/4", "-2/4", "-3/4", "-1"}));
    RootSet r54 = axes_family({Int(5), Int(4)});
    CHECK(r54.count(parse_rational("-13/20")) == 1); // 2/5 + 1/4
    CHECK(r54.count(parse_rational("-2")) == 1);     // 1 + 1
    CHECK(r54.size() == 20);                         // the 20 sums are distinct here
    CHECK(axes_family({Int(1), Int(1), Int(1)}) == parse_roots({"-3"}));
}

TEST_CASE("subdivided edge family values") {
    CHECK(subdivided_edge_family(4, 2) ==
          parse_roots({"-2/4", "-3/4", "-1", "-5/4", "-6/4"}));
    CHECK(subdivided_edge_family(2, 2) == parse_roots({"-1", "-3/2", "-2"}));
    CHECK_THROWS_AS(subdivided_edge_family(4, 3), InputError);
}

TEST_CASE("engine agreement on (x^4, x^2 y^2, y^4)") {
    MonomialIdeal ideal = MonomialIdeal::create(
        2, {{Int(4), Int(0)}, {Int(2), Int(2)}, {Int(0), Int(4)}});
    CHECK(all_roots(ideal).roots == subdivided_edge_family(4, 2));
}

TEST_CASE("bundled corpus shape") {
    auto corpus = load_corpus(BSR_TEST_CORPUS);
    REQUIRE(corpus.size() == 5);
    for (const GoldenCase& gc : corpus) {
        CHECK(!gc.name.empty());
        CHECK(!gc.expected.empty());
        for (const Rational& r : gc.expected) CHECK(r < 0);
    }
    // spot values
    CHECK(corpus[2].expected.count(Rational(-2)) == 1);       // -42/21
    CHECK(corpus[4].expected.size() == 20);                   // -13/15 .. -32/15
    CHECK(corpus[0].expected.size() == 17);                   // -1 appears once
}

TEST_CASE("corpus loader rejects junk") {
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.json"), InputError);
}
