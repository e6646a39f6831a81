#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wta/tree.hpp"
#include "wta/weight.hpp"

namespace wta {

struct FtaTransition {
    SymbolId symbol = 0;
    std::vector<StateId> children;
    StateId target = 0;
    bool operator==(const FtaTransition&) const = default;
    bool operator<(const FtaTransition& o) const {
        if (symbol != o.symbol) return symbol < o.symbol;
        if (children != o.children) return children < o.children;
        return target < o.target;
    }
};

// Nondeterministic bottom-up finite tree automaton.
struct Fta {
    RankedAlphabet alphabet;
    int numStates = 0;
    std::vector<FtaTransition> transitions;
    std::vector<bool> final;

    void addTransition(const std::vector<StateId>& children, SymbolId symbol, StateId target);
};

// Complete deterministic bottom-up tree automaton.
class Dfta {
public:
    Dfta() = default;
    Dfta(RankedAlphabet alphabet, int numStates);

    const RankedAlphabet& alphabet() const { return alphabet_; }
    int numStates() const { return numStates_; }
    StateId addState();

    void setTransition(SymbolId symbol, const std::vector<StateId>& children, StateId target);
    std::optional<StateId> transition(SymbolId symbol, const std::vector<StateId>& children) const;
    const std::map<std::vector<StateId>, StateId>& table(SymbolId symbol) const { return tables_.at(symbol); }
    bool isComplete() const;

    StateId run(const Term& t) const;
    bool accepts(const Term& t) const { return accepting.at(run(t)); }

    std::vector<bool> accepting;

private:
    RankedAlphabet alphabet_;
    int numStates_ = 0;
    std::vector<std::map<std::vector<StateId>, StateId>> tables_;
};

// Subset construction over reachable subsets; the empty subset is always
// present as the sink.
Dfta determinize(const Fta& a);

Dfta universalDfta(const RankedAlphabet& alphabet);
Dfta emptyDfta(const RankedAlphabet& alphabet);
Dfta complement(const Dfta& a);

enum class CombineMode { Intersect, Union, Difference };
Dfta combine(const Dfta& a, const Dfta& b, CombineMode mode);

// Synchronous product over reachable state tuples. tuples[s] lists the
// component states of product state s.
struct ProductDfta {
    Dfta dfta;
    std::vector<std::vector<StateId>> tuples;
};
ProductDfta product(const std::vector<const Dfta*>& parts);

std::vector<bool> reachableStates(const Dfta& a);
bool isEmpty(const Dfta& a);
bool isUniversal(const Dfta& a);
bool equivalent(const Dfta& a, const Dfta& b);
bool member(const Dfta& a, const Term& t);

bool isEmpty(const Fta& a);
bool member(const Fta& a, const Term& t);
// states reachable bottom-up from the nullary symbols
std::vector<bool> productiveStates(const Fta& a);
// productive states from which some final state can be reached
std::vector<bool> usefulStates(const Fta& a);
bool isTrim(const Fta& a);
// restriction to useful states (renumbered in order); may have no states
Fta trim(const Fta& a);

// Witness for infinite ambiguity on context c: either two distinct loops on
// p (TwoLoops, runs[0], runs[1]) or loops on p and on q plus a run with root
// state p and hole state q (Branching, runs[0] loops on p, runs[1] is the
// switch, runs[2] loops on q).
struct AmbiguityPattern {
    enum class Kind { TwoLoops, Branching };
    Kind kind = Kind::TwoLoops;
    StateId p = 0;
    StateId q = 0;
    Term context;
    std::vector<Run> runs;
};

struct AmbiguityVerdict {
    bool finitelyAmbiguous = true;
    std::optional<AmbiguityPattern> witness;
};

// requires a trim automaton (NotApplicable otherwise)
AmbiguityVerdict finitelyAmbiguous(const Fta& a);
// no tree has two distinct accepting runs
bool isUnambiguous(const Fta& a);
bool isDeterministic(const Fta& a);

BigInt countAcceptingRuns(const Fta& a, const Term& t);
// run count per state
std::vector<BigInt> countRuns(const Fta& a, const Term& t);

}  // namespace wta
