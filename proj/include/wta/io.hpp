#pragma once

#include <string>
#include <string_view>

#include "wta/algebra.hpp"
#include "wta/decide.hpp"
#include "wta/wta.hpp"

namespace wta {

// JSON wta files. Omitted transitions and roots are zero. Errors name the
// offending entry, e.g. "transitions[2].state: unknown state \"x\"".
Wta parseWta(std::string_view json);
std::string formatWta(const Wta& a);
// crisp form: transition weights one, roots are the outputs, plus
// "crisp": true and an "outputs" map over all states
std::string formatCrisp(const CrispDetWta& c);
// a complete dfta as a crisp wta over the Boolean semiring
std::string formatDfta(const Dfta& d);

// {"algebra", "letters", "states", "initial": [{state, weight}],
//  "final": [...], "transitions": [{from, letter, to, weight}]}
Wsa parseWsa(std::string_view json);

// weight literal from command-line text: JSON if it parses, otherwise the
// text as a JSON string ("-inf", "3'")
Weight parseWeightArg(const Algebra& alg, std::string_view text);
std::string formatRun(const Wta& a, const Run& r);

// {"question", "verdict", "route", "witness", "fuel_used"}; names in the
// witness refer to r.subject when set, otherwise to input
std::string formatReport(const DecisionReport& r, const Wta& input);

}  // namespace wta
