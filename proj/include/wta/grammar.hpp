#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wta {

struct GrammarSymbol {
    bool terminal = true;
    int id = 0;
    bool operator==(const GrammarSymbol&) const = default;
};

struct Rule {
    int lhs = 0;
    std::vector<GrammarSymbol> rhs;
    bool operator==(const Rule&) const = default;
};

struct Grammar {
    std::vector<std::string> nonterminals;
    std::vector<std::string> terminals;
    std::vector<Rule> rules;
    int start = 0;

    int nonterminal(std::string_view name);  // find or add
    int terminal(std::string_view name);     // find or add
};

// One rule per line: "S -> a S b | ε". Tokens starting with an uppercase
// letter are nonterminals; "ε" or "eps" is the empty word. The first
// left-hand side is the start symbol. Blank lines and lines starting with #
// are ignored.
Grammar parseGrammar(std::string_view text);
std::string formatGrammar(const Grammar& g);

}  // namespace wta
