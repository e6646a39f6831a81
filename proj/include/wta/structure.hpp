#pragma once

#include <optional>
#include <set>
#include <vector>

#include "wta/grammar.hpp"
#include "wta/wta.hpp"

namespace wta {

// G(A): start symbol "S" (renamed if taken) with S -> q for F_q != 0 and
// q -> sigma ( q1 , ... , qk ) for nonzero transitions. Terminals are the
// symbol names and the punctuation tokens "(", ",", ")".
Grammar toGrammar(const Wta& a);
// keeps exactly the nonterminals that are reachable from the start and
// productive; an empty language gives a grammar without rules
Grammar reduceGrammar(const Grammar& g);

bool hasUsefulState(const Wta& a);
// restriction to useful states; throws EmptySemantics if there is none
Wta trim(const Wta& a);

struct LoopWitness {
    StateId state = 0;
    Term context;
    Run run;
    Weight weight;
};

struct SmallLoopResult {
    bool allOne = true;
    std::optional<LoopWitness> witness;
};

// Small loops are loops on contexts of height <= |Q|. allOne holds iff no
// such loop uses a transition of weight other than one. Needs a monotonic
// algebra (NotApplicable otherwise).
SmallLoopResult smallLoopAnalysis(const Wta& a);

// xi = outer[loop[inner]] and kappa = outerRun[loopRun[innerRun]], with
// loopRun a loop on loopState and height(loop[inner]) <= |Q|.
struct PumpDecomposition {
    Term outer, loop, inner;
    StateId rootState = 0, loopState = 0;
    Run outerRun, loopRun, innerRun;
    SplitWeight outerSplit, loopSplit;
};

// needs height(xi) >= |Q|
PumpDecomposition pumpDecompose(const Wta& a, const Term& xi, const Run& kappa);
// (outer[loop^n[inner]], outerRun[loopRun^n[innerRun]])
std::pair<Term, Run> pump(const PumpDecomposition& d, int n);
// The loop placed into a tree: some tree reaching the loop state below it and
// some context from a state with nonzero root weight above it. Needs a trim wta.
PumpDecomposition embedLoop(const Wta& a, const LoopWitness& w);

// Excises loops until the height is at most |Q|. Needs allOne small loops.
std::pair<Term, Run> reduceRun(const Wta& a, const Term& xi, const Run& kappa);

struct ReachabilitySets {
    bool diverged = false;
    int layers = 0;                          // i at which the layers stopped growing
    std::vector<std::set<Weight>> perState;  // H_q
    std::set<Weight> runWeights;             // H(A)
    std::set<Weight> completeWeights;        // C(A), zero included when attained
    std::set<Weight> costSet;                // union of H_q over q with F_q != 0
    std::vector<Weight> lastGrowth;          // new elements of the last layer when diverged
};

ReachabilitySets computeHC(const Wta& a, int fuel = 64);

}  // namespace wta
