#pragma once

// The worked examples, built through the library API, plus a seeded random
// wta generator.

#include <algorithm>
#include <random>
#include <tuple>
#include <string>
#include <vector>

#include "wta/wta.hpp"

namespace fixtures {

using namespace wta;

inline Weight lit(const Algebra& alg, const std::string& jsonText) { return alg.decode(jsonText); }

// arctic, one state: [[gamma^n(alpha)]] = n
inline Wta arctic1() {
    RankedAlphabet sigma({{"gamma", 1}, {"alpha", 0}});
    Wta a(sigma, algebras::arctic(), {"q"});
    a.setTransition({}, sigma.id("alpha"), 0, Weight(0));
    a.setTransition({0}, sigma.id("gamma"), 0, Weight(1));
    a.setRoot(0, Weight(0));
    return a;
}

// naturals, states p q r: [[gamma^2n(e)]] = 2^n, odd heights give 0
inline Wta nat3() {
    RankedAlphabet sigma({{"gamma", 1}, {"e", 0}});
    Wta a(sigma, algebras::naturals(), {"p", "q", "r"});
    const SymbolId g = sigma.id("gamma");
    a.setTransition({}, sigma.id("e"), 0, Weight(1));
    a.setTransition({0}, g, 1, Weight(1));
    a.setTransition({1}, g, 0, Weight(1));
    a.setTransition({0}, g, 2, Weight(1));
    a.setTransition({2}, g, 0, Weight(1));
    a.setRoot(0, Weight(1));
    return a;
}

// two states over gamma, nu, alpha; q1 loops on gamma with weight 0, one nu
// step to q2 costs 1
inline Wta twoState(AlgebraPtr alg) {
    RankedAlphabet sigma({{"gamma", 1}, {"nu", 1}, {"alpha", 0}});
    Wta a(sigma, alg, {"q1", "q2"});
    a.setTransition({}, sigma.id("alpha"), 0, Weight(0));
    a.setTransition({0}, sigma.id("gamma"), 0, Weight(0));
    a.setTransition({0}, sigma.id("nu"), 1, Weight(1));
    a.setRoot(0, Weight(0));
    a.setRoot(1, Weight(0));
    return a;
}
inline Wta arctic2() { return twoState(algebras::arctic()); }
inline Wta tropical2() { return twoState(algebras::tropical()); }

// idempotent, monotonic, not past-finite: [[gamma^n(e)]] = 1'
inline Wta twochain() {
    RankedAlphabet sigma({{"gamma", 1}, {"e", 0}});
    auto alg = algebras::twoChain();
    Wta a(sigma, alg, {"p", "q"});
    const SymbolId g = sigma.id("gamma"), e = sigma.id("e");
    a.setTransition({}, e, 0, alg->one());
    a.setTransition({}, e, 1, lit(*alg, "\"1'\""));
    a.setTransition({0}, g, 0, lit(*alg, "\"1\""));
    a.setTransition({1}, g, 1, alg->one());
    a.setRoot(0, alg->one());
    a.setRoot(1, alg->one());
    return a;
}

inline Term tower(const Wta& a, const std::string& unary, const std::string& leaf, int n) {
    Term t = wta::leaf(a.alphabet().id(leaf));
    for (int i = 0; i < n; ++i) t = node(a.alphabet().id(unary), {t});
    return t;
}

inline Term term(const Wta& a, const std::string& text) { return parseTerm(a.alphabet(), text); }

// Random wta: each possible transition is present with probability density,
// weights drawn from pool (which should avoid zero).
inline Wta randomWta(std::mt19937& rng, const RankedAlphabet& sigma, AlgebraPtr alg, int states,
                     const std::vector<Weight>& pool, double density) {
    std::vector<std::string> names;
    for (int i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
    Wta a(sigma, alg, names);
    std::uniform_real_distribution<double> coin(0, 1);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (SymbolId s = 0; s < sigma.size(); ++s) {
        const int k = sigma.rank(s);
        std::vector<StateId> kids(k, 0);
        while (true) {
            for (StateId q = 0; q < states; ++q)
                if (coin(rng) < density) a.setTransition(kids, s, q, pool[pick(rng)]);
            int i = 0;
            while (i < k && ++kids[i] == states) kids[i++] = 0;
            if (i == k) break;
        }
    }
    for (StateId q = 0; q < states; ++q)
        if (coin(rng) < 0.6) a.setRoot(q, pool[pick(rng)]);
    if (std::all_of(a.roots().begin(), a.roots().end(), [&](const Weight& w) { return alg->isZero(w); }))
        a.setRoot(0, alg->one());
    return a;
}

struct FtaSpec {
    std::string name;
    Fta fta;
};

// rules are (children, symbol, target)
inline Fta makeFta(const RankedAlphabet& sigma, int states, std::vector<int> finals,
                   const std::vector<std::tuple<std::vector<StateId>, std::string, StateId>>& rules) {
    Fta f{sigma, states, {}, std::vector<bool>(states, false)};
    for (int q : finals) f.final[q] = true;
    for (const auto& [kids, sym, target] : rules) f.addTransition(kids, sigma.id(sym), target);
    return f;
}

inline Fta asFta(const Dfta& d) {
    Fta f{d.alphabet(), d.numStates(), {}, d.accepting};
    for (SymbolId s = 0; s < d.alphabet().size(); ++s)
        for (const auto& [kids, target] : d.table(s)) f.addTransition(kids, s, target);
    return f;
}

// Fta used to test the ambiguity criterion; names say what is expected.
inline std::vector<FtaSpec> ambiguityCorpus() {
    const RankedAlphabet unary({{"g", 1}, {"e", 0}});
    const RankedAlphabet binary({{"f", 2}, {"a", 0}});
    const RankedAlphabet both({{"f", 2}, {"g", 1}, {"a", 0}});
    std::vector<FtaSpec> out;
    out.push_back({"nat3 (two loops)", booleanProjection(nat3())});
    out.push_back({"arctic1 (deterministic)", booleanProjection(arctic1())});
    out.push_back({"arctic2 (deterministic)", booleanProjection(arctic2())});
    out.push_back({"twochain (two parallel chains)", booleanProjection(twochain())});
    out.push_back({"branching chain", makeFta(unary, 2, {1}, {{{}, "e", 0}, {{0}, "g", 0}, {{0}, "g", 1}, {{1}, "g", 1}})});
    out.push_back({"three parallel chains",
                   makeFta(unary, 3, {0, 1, 2},
                           {{{}, "e", 0}, {{}, "e", 1}, {{}, "e", 2}, {{0}, "g", 0}, {{1}, "g", 1}, {{2}, "g", 2}})});
    out.push_back({"guess the last letter",
                   makeFta(unary, 2, {1}, {{{}, "e", 0}, {{0}, "g", 0}, {{0}, "g", 1}})});
    out.push_back({"binary unambiguous",
                   makeFta(binary, 2, {0}, {{{}, "a", 0}, {{0, 0}, "f", 1}, {{1, 1}, "f", 0}, {{0, 1}, "f", 0},
                                            {{1, 0}, "f", 1}})});
    out.push_back({"binary leaf choice",
                   makeFta(binary, 2, {0}, {{{}, "a", 0}, {{}, "a", 1}, {{0, 1}, "f", 0}, {{1, 0}, "f", 0}})});
    out.push_back({"binary marked leaf",
                   makeFta(binary, 2, {1}, {{{}, "a", 0}, {{}, "a", 1}, {{0, 0}, "f", 0}, {{1, 0}, "f", 1},
                                            {{0, 1}, "f", 1}})});
    out.push_back({"binary two finals", makeFta(binary, 2, {0, 1}, {{{}, "a", 0}, {{0, 0}, "f", 0}, {{0, 0}, "f", 1}})});
    out.push_back({"mixed nondeterministic start",
                   makeFta(both, 3, {2}, {{{}, "a", 0}, {{}, "a", 1}, {{0}, "g", 2}, {{1}, "g", 2},
                                          {{2, 2}, "f", 2}, {{2}, "g", 2}})});
    out.push_back({"determinized nat3", asFta(determinize(booleanProjection(nat3())))});
    return out;
}

}  // namespace fixtures
