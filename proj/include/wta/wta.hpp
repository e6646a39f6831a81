#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wta/algebra.hpp"
#include "wta/fta.hpp"
#include "wta/grammar.hpp"
#include "wta/tree.hpp"

namespace wta {

struct Transition {
    SymbolId symbol = 0;
    std::vector<StateId> children;
    StateId target = 0;
    Weight weight;
};

// Weighted tree automaton. Transitions are stored sparsely; anything not
// stored has weight zero, and storing zero removes the entry.
class Wta {
public:
    Wta(RankedAlphabet alphabet, AlgebraPtr algebra, std::vector<std::string> states);

    const RankedAlphabet& alphabet() const { return alphabet_; }
    const Algebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebraPtr() const { return algebra_; }

    int numStates() const { return static_cast<int>(states_.size()); }
    const std::vector<std::string>& stateNames() const { return states_; }
    const std::string& stateName(StateId q) const { return states_.at(q); }
    std::optional<StateId> findState(std::string_view name) const;

    void setTransition(const std::vector<StateId>& children, SymbolId symbol, StateId target, Weight w);
    Weight transition(const std::vector<StateId>& children, SymbolId symbol, StateId target) const;
    // nonzero transitions on a symbol, in insertion order
    const std::vector<Transition>& transitionsOf(SymbolId symbol) const { return bySymbol_.at(symbol); }
    std::vector<Transition> transitions() const;
    std::size_t transitionCount() const;

    void setRoot(StateId q, Weight w);
    const Weight& root(StateId q) const { return roots_.at(q); }
    const std::vector<Weight>& roots() const { return roots_; }

private:
    void checkState(StateId q) const;

    RankedAlphabet alphabet_;
    AlgebraPtr algebra_;
    std::vector<std::string> states_;
    std::vector<std::vector<Transition>> bySymbol_;
    std::vector<Weight> roots_;
};

// All runs on a term (any root state). Holes are labeled holeState, or every
// state when holeState is empty.
std::vector<Run> runs(const Wta& a, const Term& t, std::optional<StateId> holeState = std::nullopt);
// R(q, c, p): runs on the context c with root state q and exit state p
std::vector<Run> runsOnContext(const Wta& a, StateId q, const Term& c, StateId p);
bool isRun(const Wta& a, const Term& t, const Run& r);

// product of the children weights left to right, then the transition weight
Weight weightOfRun(const Wta& a, const Term& t, const Run& r);
Weight evaluate(const Wta& a, const Term& t);

struct SplitWeight {
    Weight left;
    Weight right;
};

// left and right factors of the run weight around the hole of c
SplitWeight splitWeight(const Wta& a, const Term& c, const Run& r);
// rho[theta]: the hole of c (labeled with theta's root state) replaced
Run combineRuns(const Term& c, const Run& rho, const Run& theta);
// rho^n on c^n; rho^0 is the hole labeled with the exit state of rho
Run powerRun(const Term& c, const Run& rho, int n);
StateId exitState(const Term& c, const Run& r);

Wta mapWeights(const Wta& a, const Homomorphism& h);
Fta booleanProjection(const Wta& a);
// the fta viewed as a wta over the Boolean semiring
Wta asBooleanWta(const Fta& a);

// Complete deterministic automaton with an output weight per state; the
// value of a tree is the output of the state it reaches.
struct CrispDetWta {
    Dfta dfta;
    AlgebraPtr algebra;
    std::vector<Weight> outputs;

    Weight evaluate(const Term& t) const { return outputs.at(dfta.run(t)); }
    // outputs of reachable states, deduplicated
    std::vector<Weight> image() const;
};

// weighted string automaton over letters
struct Wsa {
    struct Edge {
        StateId from = 0;
        int letter = 0;
        StateId to = 0;
        Weight weight;
    };
    AlgebraPtr algebra;
    std::vector<std::string> letters;
    std::vector<std::string> states;
    std::vector<Weight> initial;
    std::vector<Weight> final;
    std::vector<Edge> edges;
};

// Letters become unary symbols and a fresh nullary end marker is added. The
// word a1...an is encoded as an(...a1(e)...), last letter outermost.
struct WsaEncoding {
    Wta wta;
    SymbolId end = 0;
    std::vector<SymbolId> letterSymbols;

    Term encode(const std::vector<int>& word) const;
};

WsaEncoding fromWsa(const Wsa& w);

// Rules become symbols r0, r1, ... with rank = number of nonterminals on the
// right-hand side and weight = number of terminals; states are nonterminals.
Wta fromCfg(const Grammar& g);

}  // namespace wta
