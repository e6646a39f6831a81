#include <doctest.h>

#include "wta/algebra.hpp"

using namespace wta;

namespace {

std::vector<AlgebraPtr> everyAlgebra() {
    return {algebras::boolean(),      algebras::naturals(),       algebras::arctic(),
            algebras::tropical(),     algebras::lcm(),            algebras::fset(),
            algebras::matrices(1),    algebras::matrices(2),      algebras::flang("ab"),
            algebras::plusplus(),     algebras::truncatedPlus(),  algebras::induced("plus", "affine"),
            algebras::induced("max", "plus"), algebras::twoChain()};
}

}  // namespace

TEST_CASE("axioms hold on the samples of every algebra") {
    for (const auto& alg : everyAlgebra()) {
        CAPTURE(alg->descriptor());
        const auto violations = checkAxioms(*alg, alg->samples());
        for (const auto& v : violations) MESSAGE(v.law);
        CHECK(violations.empty());
    }
}

TEST_CASE("literals round-trip through encode and decode") {
    for (const auto& alg : everyAlgebra()) {
        CAPTURE(alg->descriptor());
        for (const auto& w : alg->samples()) CHECK(alg->decode(alg->encode(w)) == w);
        // the descriptor rebuilds an algebra with identical encodings
        auto again = makeAlgebra(alg->descriptor());
        for (const auto& w : alg->samples()) CHECK(again->encode(w) == alg->encode(w));
    }
}

TEST_CASE("arctic and tropical arithmetic") {
    auto ar = algebras::arctic();
    auto tr = algebras::tropical();
    CHECK(ar->add(Weight(2), Weight(5)) == Weight(5));
    CHECK(ar->mul(Weight(2), Weight(5)) == Weight(7));
    CHECK(ar->isZero(ar->decode("\"-inf\"")));
    CHECK(ar->isOne(Weight(0)));
    CHECK(tr->add(Weight(2), Weight(5)) == Weight(2));
    CHECK(tr->mul(Weight(2), Weight(5)) == Weight(7));
    CHECK(ar->decode("3") == ar->decode("\"3\""));
}

TEST_CASE("two-chain order puts every primed element above the plain ones") {
    auto tc = algebras::twoChain();
    const Weight one = tc->one(), n1 = tc->decode("\"1\""), p1 = tc->decode("\"1'\"");
    CHECK(tc->add(n1, p1) == p1);
    CHECK(tc->add(tc->decode("\"100\""), p1) == p1);
    CHECK(tc->add(one, n1) == n1);
    CHECK(tc->mul(n1, p1) == tc->decode("\"2'\""));
    CHECK((tc->flags().past_finite == Tri::False));
    CHECK((tc->flags().monotonic == Tri::True));
    CHECK((tc->flags().idempotent == Tri::True));
    CHECK_THROWS_AS(tc->decode("\"0'\""), ParseError);
}

TEST_CASE("decoding rejects non-elements") {
    CHECK_THROWS_AS(algebras::naturals()->decode("-1"), ParseError);
    CHECK_THROWS_AS(algebras::arctic()->decode("\"inf\""), ParseError);
    CHECK_THROWS_AS(algebras::boolean()->decode("2"), ParseError);
    CHECK_THROWS_AS(algebras::matrices(2)->decode("[1,2,3]"), ParseError);
    CHECK_THROWS(makeAlgebra(R"({"kind":"nope","params":{}})"));
}

TEST_CASE("additive order") {
    CHECK(additiveOrder(*algebras::naturals(), Weight(1), 64).kind == AdditiveOrder::Kind::Infinite);
    CHECK(additiveOrder(*algebras::boolean(), Weight(1), 64) == AdditiveOrder::finite(1, 1));
    CHECK(additiveOrder(*algebras::arctic(), Weight(3), 64) == AdditiveOrder::finite(1, 1));
    auto mod = quotient(algebras::naturals(), QuotientKind::modulo(6));
    // 2, 4, 0, 2, ... : 3*2 = 0 and 4*2 = 2
    CHECK(additiveOrder(*mod.algebra, mod.hom(Weight(2)), 64) == AdditiveOrder::finite(1, 3));
    auto thr = quotient(algebras::naturals(), QuotientKind::threshold(5));
    // 2, 4, 6=6+, 6+, ...
    CHECK(additiveOrder(*thr.algebra, thr.hom(Weight(2)), 64) == AdditiveOrder::finite(3, 1));
}

TEST_CASE("quotients are homomorphic images with exhaustively checked flags") {
    auto nat = algebras::naturals();
    std::vector<Quotient> qs{quotient(nat, QuotientKind::threshold(0)), quotient(nat, QuotientKind::threshold(3)),
                             quotient(nat, QuotientKind::modulo(2)), quotient(nat, QuotientKind::modulo(5)),
                             quotient(nat, QuotientKind::pastCut(Weight(4)))};
    for (const auto& q : qs) {
        CAPTURE(q.algebra->descriptor());
        REQUIRE(q.algebra->carrier());
        CHECK(checkAxioms(*q.algebra, *q.algebra->carrier()).empty());
        for (int a = 0; a < 12; ++a)
            for (int b = 0; b < 12; ++b) {
                CHECK(q.hom(nat->add(a, b)) == q.algebra->add(q.hom(a), q.hom(b)));
                CHECK(q.hom(nat->mul(a, b)) == q.algebra->mul(q.hom(a), q.hom(b)));
            }
        CHECK(q.hom(nat->zero()) == q.algebra->zero());
        CHECK(q.hom(nat->one()) == q.algebra->one());
        CHECK((q.algebra->flags().commutative == Tri::True));
        // representatives decode back to their own class
        const auto classes = *q.algebra->carrier();
        for (const auto& c : classes) CHECK(q.algebra->decode(q.algebra->encode(c)) == c);
    }
    CHECK_THROWS(quotient(nat, QuotientKind::modulo(1)));
    CHECK_THROWS_AS(quotient(algebras::twoChain(), QuotientKind::pastCut(Weight(1))), NotApplicable);
}

TEST_CASE("pastCut on the arctic semiring keeps everything up to the cut") {
    auto ar = algebras::arctic();
    auto q = quotient(ar, QuotientKind::pastCut(Weight(2)));
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            if (a == b) continue;
            CHECK(q.hom(Weight(a)) != q.hom(Weight(b)));
        }
    CHECK(q.hom(Weight(3)) == q.hom(Weight(7)));
    CHECK(q.hom(ar->zero()) == q.algebra->zero());
}

TEST_CASE("withFlags only changes the flags") {
    Flags f;
    f.monotonic = Tri::False;
    auto a = withFlags(algebras::naturals(), f);
    CHECK((a->flags().monotonic == Tri::False));
    CHECK(a->add(Weight(2), Weight(3)) == Weight(5));
}
