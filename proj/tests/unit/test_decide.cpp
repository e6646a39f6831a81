#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wta/decide.hpp"

using namespace wta;
using fixtures::lit;

namespace {

bool is(const DecisionReport& r, Verdict v) { return r.verdict == v; }

// arctic wta whose value is 0 on every tree
Wta arcticConstant() {
    const RankedAlphabet s({{"gamma", 1}, {"alpha", 0}});
    Wta a(s, algebras::arctic(), {"q"});
    a.setTransition({}, 1, 0, Weight(0));
    a.setTransition({0}, 0, 0, Weight(0));
    a.setRoot(0, Weight(0));
    return a;
}

}  // namespace

TEST_CASE("finite image on the fixtures") {
    auto a1 = decideFiniteImage(fixtures::arctic1());
    CHECK(is(a1, Verdict::No));
    CHECK(a1.route == "small-loop/past-finite");
    const auto* loop = std::get_if<LoopEvidence>(&a1.witness);
    REQUIRE(loop);
    CHECK(loop->embedding);

    auto n3 = decideFiniteImage(fixtures::nat3());
    CHECK(is(n3, Verdict::No));
    CHECK(n3.route == "unbounded-count/infinite-order");

    auto a2 = decideFiniteImage(fixtures::arctic2(), 256, true);
    CHECK(is(a2, Verdict::Yes));
    CHECK(a2.route == "additively-locally-finite");
    CHECK(std::holds_alternative<CrispDetWta>(a2.witness));

    auto tc = decideFiniteImage(fixtures::twochain());
    CHECK(is(tc, Verdict::Unknown));
    CHECK(tc.route == "small-loop/ambiguous-not-past-finite");

    CHECK(decideFiniteImage(fixtures::tropical2()).route == "not-monotonic");

    const auto q = quotient(algebras::naturals(), QuotientKind::modulo(3));
    CHECK(decideFiniteImage(mapWeights(fixtures::nat3(), q.hom)).route == "finite-algebra");

    Wta none(fixtures::nat3().alphabet(), algebras::naturals(), {"p"});
    auto r = decideFiniteImage(none);
    CHECK(is(r, Verdict::Yes));
    CHECK(r.route == "no-useful-state");
}

TEST_CASE("unambiguous wta over a monotonic algebra that is not past-finite") {
    // one chain only: the value of gamma^n(e) is n, so the image is infinite
    const RankedAlphabet s({{"gamma", 1}, {"e", 0}});
    auto alg = algebras::twoChain();
    Wta a(s, alg, {"p"});
    a.setTransition({}, 1, 0, alg->one());
    a.setTransition({0}, 0, 0, lit(*alg, "\"1\""));
    a.setRoot(0, alg->one());
    auto r = decideFiniteImage(a);
    CHECK(is(r, Verdict::No));
    CHECK(r.route == "small-loop/unambiguous");
}

TEST_CASE("image size bounds") {
    const Wta a2 = fixtures::arctic2();
    auto k3 = decideImageAtMostK(a2, 3);
    CHECK(is(k3, Verdict::Yes));
    auto k2 = decideImageAtMostK(a2, 2);
    CHECK(is(k2, Verdict::No));
    CHECK(decideImageAtMostK(fixtures::arctic1(), 5).route == "small-loop");
    auto n3 = decideImageAtMostK(fixtures::nat3(), 3);
    CHECK(is(n3, Verdict::No));
    CHECK(n3.route == "enumeration");
    const auto* seen = std::get_if<ValueEvidence>(&n3.witness);
    REQUIRE(seen);
    CHECK(seen->values.size() == 4);
    for (std::size_t i = 0; i < seen->values.size(); ++i)
        CHECK(evaluate(fixtures::nat3(), seen->trees[i]) == seen->values[i]);
    CHECK(is(decideImageAtMostK(fixtures::twochain(), 2), Verdict::Unknown));
    // fuel is respected
    auto starved = decideImageAtMostK(a2, 3, 2);
    CHECK(is(starved, Verdict::Unknown));
    CHECK_FALSE(starved.route.empty());
    CHECK_THROWS(decideImageAtMostK(a2, 0));
}

TEST_CASE("step properties") {
    const Wta a2 = fixtures::arctic2();
    const Algebra& ar = a2.algebra();
    CHECK(is(decideStepProperties(a2, StepQuestion::constant()), Verdict::No));
    CHECK(is(decideStepProperties(a2, StepQuestion::oneStep()), Verdict::No));
    CHECK(is(decideStepProperties(a2, StepQuestion::eStep({ar.zero(), Weight(0), Weight(1)})), Verdict::Yes));
    CHECK(is(decideStepProperties(a2, StepQuestion::eStep({ar.zero(), Weight(1)})), Verdict::No));
    CHECK(is(decideStepProperties(a2, StepQuestion::eStep({})), Verdict::No));

    const Wta c = arcticConstant();
    CHECK(is(decideStepProperties(c, StepQuestion::constant()), Verdict::Yes));
    CHECK(is(decideStepProperties(c, StepQuestion::constantEq(Weight(0))), Verdict::Yes));
    CHECK(is(decideStepProperties(c, StepQuestion::constantEq(Weight(1))), Verdict::No));
    CHECK(is(decideStepProperties(c, StepQuestion::oneStep()), Verdict::Yes));

    // zero plus one other value is still one step
    const Wta a1tail = [] {
        Wta a = fixtures::arctic2();
        a.setRoot(0, a.algebra().zero());
        return a;
    }();
    CHECK(is(decideStepProperties(a1tail, StepQuestion::oneStep()), Verdict::Yes));
}

TEST_CASE("cost finiteness") {
    auto n3 = costFinite(fixtures::nat3());
    CHECK(is(n3, Verdict::Yes));
    const auto* ev = std::get_if<ValueEvidence>(&n3.witness);
    REQUIRE(ev);
    CHECK(ev->values == std::vector<Weight>{Weight(1)});
    CHECK(is(costFinite(fixtures::arctic1()), Verdict::No));
    CHECK(is(costFinite(fixtures::twochain()), Verdict::No));
    CHECK(is(costFinite(fixtures::arctic2()), Verdict::Yes));
}

TEST_CASE("context-free grammars") {
    CHECK(is(cfgFinite(parseGrammar("S -> a S | a\n")), Verdict::No));
    CHECK(is(cfgFinite(parseGrammar("S -> a B | b\nB -> c | d\n")), Verdict::Yes));
    // unit cycles do not make the language infinite
    CHECK(is(cfgFinite(parseGrammar("S -> S | a\n")), Verdict::Yes));
    auto empty = cfgFinite(parseGrammar("S -> a S\n"));
    CHECK(is(empty, Verdict::Yes));
    CHECK(empty.route == "empty-language");
}
