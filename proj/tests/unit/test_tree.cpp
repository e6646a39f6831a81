#include <doctest.h>

#include "../oracles.hpp"
#include "wta/tree.hpp"

using namespace wta;

namespace {
RankedAlphabet mixed() { return RankedAlphabet({{"f", 2}, {"g", 1}, {"a", 0}, {"b", 0}}); }
}  // namespace

TEST_CASE("alphabet validation") {
    CHECK_THROWS(RankedAlphabet({{"g", 1}}));
    CHECK_THROWS(RankedAlphabet({{"a", 0}, {"a", 0}}));
    const auto s = mixed();
    CHECK(s.maxRank() == 2);
    CHECK(s.find("g") == 1);
    CHECK_FALSE(s.find("z"));
    CHECK_THROWS_AS(s.id("z"), ParseError);
}

TEST_CASE("term syntax round-trips") {
    const auto s = mixed();
    for (const char* text : {"a", "g(a)", "f(g(b),a)", "f([],a)", "g(f(a,g([])))"}) {
        const Term t = parseTerm(s, text);
        CHECK(formatTerm(s, t) == text);
    }
    CHECK(formatTerm(s, parseTerm(s, " f ( a , b ) ")) == "f(a,b)");
    CHECK_THROWS_AS(parseTerm(s, "f(a)"), ParseError);
    CHECK_THROWS_AS(parseTerm(s, "g(a"), ParseError);
    CHECK_THROWS_AS(parseTerm(s, "h(a)"), ParseError);
    CHECK_THROWS_AS(parseTerm(s, "a b"), ParseError);
}

TEST_CASE("height, size, positions") {
    const auto s = mixed();
    const Term t = parseTerm(s, "f(g(a),b)");
    CHECK(height(t) == 2);
    CHECK(size(t) == 4);
    CHECK(positions(t).size() == 4);
    CHECK(subtermAt(t, {0, 0}) == parseTerm(s, "a"));
    CHECK(replaceAt(t, {1}, parseTerm(s, "g(b)")) == parseTerm(s, "f(g(a),g(b))"));
}

TEST_CASE("contexts, substitution, powers") {
    const auto s = mixed();
    const Term c = parseTerm(s, "f(a,g([]))");
    CHECK(isContext(c));
    CHECK(holePosition(c) == Position{1, 0});
    CHECK(substitute(c, parseTerm(s, "b")) == parseTerm(s, "f(a,g(b))"));
    CHECK(power(c, 0) == hole());
    CHECK(power(c, 2) == parseTerm(s, "f(a,g(f(a,g([]))))"));
    CHECK_FALSE(isContext(parseTerm(s, "f([],[])")));
    CHECK_THROWS(holePosition(parseTerm(s, "a")));
}

TEST_CASE("enumeration matches the brute-force tree list") {
    const auto s = mixed();
    for (int h = 0; h <= 3; ++h) {
        auto lib = enumerate(s, TermKind::Trees, h);
        auto ref = oracle::trees(s, h);
        CHECK(lib.size() == ref.size());
        std::set<Term> a(lib.begin(), lib.end()), b(ref.begin(), ref.end());
        CHECK(a == b);
        CHECK(a.size() == lib.size());
        for (std::size_t i = 1; i < lib.size(); ++i) CHECK(height(lib[i - 1]) <= height(lib[i]));
    }
    // contexts of height <= 1: [] ; g([]) ; f([],a) f([],b) f(a,[]) f(b,[])
    CHECK(enumerate(s, TermKind::Contexts, 1).size() == 6);
}

TEST_CASE("tree stream follows enumerate and ends on finite alphabets") {
    const auto s = mixed();
    const auto lib = enumerate(s, TermKind::Trees, 3);
    TreeStream stream(s);
    for (const auto& t : lib) {
        const Term* x = stream.next();
        REQUIRE(x);
        CHECK(*x == t);
    }
    TreeStream leaves(RankedAlphabet({{"a", 0}, {"b", 0}}));
    CHECK(leaves.next());
    CHECK(leaves.next());
    CHECK(leaves.next() == nullptr);
}
