#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "wta/structure.hpp"
#include "wta/wta.hpp"

namespace wta {

// Naturals-valued wta counting, per tree, the runs of A whose complete weight
// is target. State (q, y) tracks the run weight y.
struct CountingWta {
    Wta wta;
    Weight target;
    std::vector<std::pair<StateId, Weight>> stateLabels;
};

// tracked must contain H(A)
CountingWta buildCountingWta(const Wta& a, const std::set<Weight>& tracked, const Weight& target);

// Weight-vector subset construction; needs a finite algebra that is left and
// right distributive (NotApplicable otherwise).
CrispDetWta vectorDeterminize(const Wta& a);

struct NatTarget {
    enum class Kind : std::uint8_t { Exact, Residue };
    Kind kind = Kind::Exact;
    unsigned m = 0;
    unsigned n = 0;

    // value == n
    static NatTarget exact(unsigned n) { return {Kind::Exact, 0, n}; }
    // value in m + n*N
    static NatTarget residue(unsigned m, unsigned n) { return {Kind::Residue, m, n}; }
};

// trees whose value under a naturals-valued wta hits the target
Dfta natPreimage(const Wta& a, const NatTarget& target);

struct NatImageVerdict {
    bool finite = true;
    std::optional<LoopWitness> loop;             // small loop of weight > 1
    std::optional<AmbiguityPattern> ambiguity;   // unbounded number of accepting runs
};

NatImageVerdict natFiniteImage(const Wta& a);

}  // namespace wta
