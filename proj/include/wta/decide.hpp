#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wta/crispdet.hpp"
#include "wta/grammar.hpp"
#include "wta/structure.hpp"

namespace wta {

enum class Verdict : std::uint8_t { Yes, No, Unknown };
const char* toString(Verdict v);

// A small loop of weight other than one, placed into a tree when possible so
// it can be pumped.
struct LoopEvidence {
    LoopWitness loop;
    std::optional<PumpDecomposition> embedding;
};

// trees whose values were collected, parallel to the values
struct ValueEvidence {
    std::vector<Weight> values;
    std::vector<Term> trees;
};

using Evidence = std::variant<std::monostate, LoopEvidence, ValueEvidence, CrispDetWta, AmbiguityPattern>;

struct DecisionReport {
    std::string question;
    Verdict verdict = Verdict::Unknown;
    std::string route;
    Evidence witness;
    std::uint64_t fuelUsed = 0;
    // the automaton the witness refers to (trimmed input, counting wta, ...)
    std::optional<Wta> subject;
};

DecisionReport decideFiniteImage(const Wta& a, int fuel = 256, bool wantCrisp = false);
DecisionReport decideImageAtMostK(const Wta& a, int k, int fuel = 256);

struct StepQuestion {
    enum class Kind : std::uint8_t { ConstantEq, Constant, OneStep, EStep };
    Kind kind = Kind::Constant;
    Weight b;                 // ConstantEq
    std::vector<Weight> set;  // EStep

    static StepQuestion constantEq(Weight b) { return {Kind::ConstantEq, std::move(b), {}}; }
    static StepQuestion constant() { return {Kind::Constant, {}, {}}; }
    static StepQuestion oneStep() { return {Kind::OneStep, {}, {}}; }
    static StepQuestion eStep(std::vector<Weight> e) { return {Kind::EStep, {}, std::move(e)}; }
};

DecisionReport decideStepProperties(const Wta& a, const StepQuestion& q, int fuel = 256);
DecisionReport costFinite(const Wta& a, int fuel = 256);
DecisionReport cfgFinite(const Grammar& g, int fuel = 256);

}  // namespace wta
