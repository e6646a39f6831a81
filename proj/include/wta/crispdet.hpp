#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wta/counting.hpp"
#include "wta/structure.hpp"
#include "wta/wta.hpp"

namespace wta {

// sum of the weights whose language contains the tree
struct StepMapping {
    AlgebraPtr algebra;
    std::vector<std::pair<Weight, Dfta>> steps;
};

Weight stepEvaluate(const StepMapping& m, const Term& t);
Weight stepEvaluate(const CrispDetWta& c, const Term& t);

// How the count of runs with complete weight b was made finite: either the
// count is bounded (Bounded, bound = max count) or the multiples of b cycle
// (Periodic, index and period of b).
struct WeightRoute {
    enum class Kind : std::uint8_t { Bounded, Periodic };
    Weight b;
    Kind kind = Kind::Bounded;
    std::uint64_t bound = 0;
    std::uint64_t index = 0;
    std::uint64_t period = 0;
};

// Both searches for one weight b of C(A), advanced one index at a time:
// (i) is the union of the count-j languages, j <= i, universal; (ii) does
// i*b equal an earlier multiple.
class WeightSearch {
public:
    WeightSearch(Wta counting, AlgebraPtr algebra, Weight b);

    // one round of each search; returns done()
    bool step();
    bool done() const { return done_; }
    std::uint64_t rounds() const { return round_; }
    const WeightRoute& route() const { return route_; }
    // (j*b, language) pairs partitioning the trees; valid once done
    const std::vector<std::pair<Weight, Dfta>>& steps() const { return steps_; }

private:
    const Dfta& exact(std::uint64_t j);

    Wta counting_;
    AlgebraPtr algebra_;
    WeightRoute route_;
    bool done_ = false;
    std::uint64_t round_ = 0;
    std::vector<Dfta> exact_;
    std::optional<Dfta> covered_;
    std::vector<Weight> multiples_;
    std::vector<std::pair<Weight, Dfta>> steps_;
};

// synchronous product of the step languages with summed outputs
CrispDetWta assemble(const RankedAlphabet& alphabet, const StepMapping& m);

struct CrispResult {
    enum class Status : std::uint8_t { Ok, Diverged, NotApplicable };
    Status status = Status::Ok;
    std::optional<CrispDetWta> wta;
    StepMapping steps;
    std::vector<WeightRoute> routes;
    ReachabilitySets reach;
    std::uint64_t fuelUsed = 0;
    std::string reason;
};

// fuel caps the H/C layers and, per weight b, the rounds of the two
// interleaved searches
CrispResult crispDeterminize(const Wta& a, int fuel = 256);

// trees with value b; needs a finite algebra or a computable past(b)
Dfta preimage(const Wta& a, const Weight& b, int fuel = 256);
Dfta support(const Wta& a, int fuel = 256);

}  // namespace wta
