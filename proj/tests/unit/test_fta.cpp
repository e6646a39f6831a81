#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace wta;

namespace {

// keeps the brute-force tree lists small for wide alphabets
int heightFor(const RankedAlphabet& s) {
    if (s.maxRank() <= 1) return 6;
    return s.size() > 2 ? 3 : 4;
}

std::vector<Term> sampleTrees(const RankedAlphabet& s) { return oracle::trees(s, heightFor(s)); }

bool bounded(const std::vector<BigInt>& maxima) { return maxima.back() == maxima[5]; }

}  // namespace

TEST_CASE("determinize preserves the language") {
    for (const auto& spec : fixtures::ambiguityCorpus()) {
        CAPTURE(spec.name);
        const Dfta d = determinize(spec.fta);
        CHECK(d.isComplete());
        for (const auto& t : sampleTrees(spec.fta.alphabet)) {
            CHECK(d.accepts(t) == oracle::accepts(spec.fta, t));
            CHECK(member(spec.fta, t) == oracle::accepts(spec.fta, t));
        }
    }
}

TEST_CASE("boolean operations on dfta") {
    const auto corpus = fixtures::ambiguityCorpus();
    const Dfta a = determinize(corpus[7].fta);  // binary unambiguous
    const Dfta b = determinize(corpus[9].fta);  // binary marked leaf
    const Dfta c = complement(a);
    const Dfta i = combine(a, b, CombineMode::Intersect);
    const Dfta u = combine(a, b, CombineMode::Union);
    const Dfta d = combine(a, b, CombineMode::Difference);
    for (const auto& t : sampleTrees(a.alphabet())) {
        const bool x = oracle::accepts(corpus[7].fta, t), y = oracle::accepts(corpus[9].fta, t);
        CHECK(c.accepts(t) == !x);
        CHECK(i.accepts(t) == (x && y));
        CHECK(u.accepts(t) == (x || y));
        CHECK(d.accepts(t) == (x && !y));
    }
    const ProductDfta p = product({&a, &b, &c});
    for (const auto& t : sampleTrees(a.alphabet())) {
        const auto& tuple = p.tuples[p.dfta.run(t)];
        CHECK(tuple == std::vector<StateId>{a.run(t), b.run(t), c.run(t)});
    }
    CHECK(isEmpty(combine(a, c, CombineMode::Intersect)));
    CHECK(isUniversal(combine(a, c, CombineMode::Union)));
    CHECK(equivalent(a, complement(c)));
    CHECK_FALSE(equivalent(a, b));
    CHECK(isUniversal(universalDfta(a.alphabet())));
    CHECK(isEmpty(emptyDfta(a.alphabet())));
}

TEST_CASE("emptiness and trimming of fta") {
    const RankedAlphabet s({{"g", 1}, {"e", 0}});
    // state 1 is unproductive, state 2 is unreachable from a final state
    const Fta f = fixtures::makeFta(s, 3, {0, 1}, {{{}, "e", 0}, {{1}, "g", 1}, {{0}, "g", 2}, {{0}, "g", 0}});
    CHECK(productiveStates(f) == std::vector<bool>{true, false, true});
    CHECK(usefulStates(f) == std::vector<bool>{true, false, false});
    CHECK_FALSE(isTrim(f));
    const Fta t = trim(f);
    CHECK(t.numStates == 1);
    CHECK(isTrim(t));
    for (const auto& x : oracle::trees(s, 5)) CHECK(oracle::accepts(t, x) == oracle::accepts(f, x));
    CHECK_FALSE(isEmpty(f));
    const Fta none = fixtures::makeFta(s, 1, {0}, {{{0}, "g", 0}});
    CHECK(isEmpty(none));
    CHECK(trim(none).numStates == 0);
}

TEST_CASE("run counting matches brute force") {
    for (const auto& spec : fixtures::ambiguityCorpus()) {
        CAPTURE(spec.name);
        for (const auto& t : sampleTrees(spec.fta.alphabet)) {
            CHECK(countAcceptingRuns(spec.fta, t) == oracle::acceptingRuns(spec.fta, t));
            CHECK(countRuns(spec.fta, t) == oracle::ftaRuns(spec.fta, t));
        }
    }
    const Fta n3 = booleanProjection(fixtures::nat3());
    for (int n = 0; n <= 8; ++n)
        CHECK(countAcceptingRuns(n3, fixtures::tower(fixtures::nat3(), "gamma", "e", 2 * n)) == BigInt(1) << n);
}

TEST_CASE("unambiguity and determinism") {
    for (const auto& spec : fixtures::ambiguityCorpus()) {
        CAPTURE(spec.name);
        const auto maxima = oracle::maxAcceptingRuns(spec.fta, 6);
        CHECK(isUnambiguous(spec.fta) == (maxima.back() <= 1));
        if (isDeterministic(spec.fta)) CHECK(isUnambiguous(spec.fta));
    }
    CHECK(isDeterministic(booleanProjection(fixtures::arctic2())));
    CHECK_FALSE(isDeterministic(booleanProjection(fixtures::nat3())));
}

TEST_CASE("finite ambiguity agrees with the growth of run counts") {
    for (const auto& spec : fixtures::ambiguityCorpus()) {
        CAPTURE(spec.name);
        const Fta f = trim(spec.fta);
        const auto verdict = finitelyAmbiguous(f);
        const auto maxima = oracle::maxAcceptingRuns(f, 8);
        CHECK(verdict.finitelyAmbiguous == bounded(maxima));
        if (verdict.finitelyAmbiguous) continue;
        REQUIRE(verdict.witness);
        const auto& w = *verdict.witness;
        const Wta asWta = asBooleanWta(f);
        CHECK(isContext(w.context));
        for (const auto& r : w.runs) CHECK(isRun(asWta, w.context, r));
        if (w.kind == AmbiguityPattern::Kind::TwoLoops) {
            REQUIRE(w.runs.size() == 2);
            CHECK(w.runs[0] != w.runs[1]);
            for (const auto& r : w.runs) {
                CHECK(r.state == w.p);
                CHECK(exitState(w.context, r) == w.p);
            }
        } else {
            REQUIRE(w.runs.size() == 3);
            CHECK(w.p != w.q);
            CHECK((w.runs[0].state == w.p && exitState(w.context, w.runs[0]) == w.p));
            CHECK((w.runs[1].state == w.p && exitState(w.context, w.runs[1]) == w.q));
            CHECK((w.runs[2].state == w.q && exitState(w.context, w.runs[2]) == w.q));
        }
    }
    const RankedAlphabet s({{"g", 1}, {"e", 0}});
    CHECK_THROWS_AS(finitelyAmbiguous(fixtures::makeFta(s, 2, {0}, {{{}, "e", 0}, {{1}, "g", 1}})), NotApplicable);
}
