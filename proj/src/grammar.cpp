#include "wta/grammar.hpp"

#include <cctype>
#include <sstream>

#include "wta/errors.hpp"

namespace wta {

int Grammar::nonterminal(std::string_view name) {
    for (std::size_t i = 0; i < nonterminals.size(); ++i)
        if (nonterminals[i] == name) return static_cast<int>(i);
    nonterminals.emplace_back(name);
    return static_cast<int>(nonterminals.size()) - 1;
}

int Grammar::terminal(std::string_view name) {
    for (std::size_t i = 0; i < terminals.size(); ++i)
        if (terminals[i] == name) return static_cast<int>(i);
    terminals.emplace_back(name);
    return static_cast<int>(terminals.size()) - 1;
}

namespace {
bool isEpsilon(const std::string& tok) { return tok == "ε" || tok == "eps"; }
bool isNonterminal(const std::string& tok) { return std::isupper(static_cast<unsigned char>(tok[0])) != 0; }
}  // namespace

Grammar parseGrammar(std::string_view text) {
    Grammar g;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineNo = 0;
    bool haveStart = false;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream toks(line);
        std::vector<std::string> words;
        for (std::string w; toks >> w;) words.push_back(w);
        if (words.empty() || words[0][0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("grammar line " + std::to_string(lineNo) + ": " + msg);
        };
        if (words.size() < 2 || words[1] != "->") fail("expected \"A -> ...\"");
        if (!isNonterminal(words[0])) fail("left-hand side \"" + words[0] + "\" is not a nonterminal");
        const int lhs = g.nonterminal(words[0]);
        if (!haveStart) {
            g.start = lhs;
            haveStart = true;
        }
        Rule cur{lhs, {}};
        bool sawEpsilon = false;
        auto flush = [&] {
            if (sawEpsilon && !cur.rhs.empty()) fail("ε mixed with other symbols");
            g.rules.push_back(cur);
            cur.rhs.clear();
            sawEpsilon = false;
        };
        bool empty = true;
        for (std::size_t i = 2; i < words.size(); ++i) {
            const auto& w = words[i];
            if (w == "|") {
                if (empty && !sawEpsilon) fail("empty alternative (write ε)");
                flush();
                empty = true;
                continue;
            }
            empty = false;
            if (isEpsilon(w)) {
                sawEpsilon = true;
                continue;
            }
            if (isNonterminal(w))
                cur.rhs.push_back({false, g.nonterminal(w)});
            else
                cur.rhs.push_back({true, g.terminal(w)});
        }
        if (empty && !sawEpsilon) fail("empty alternative (write ε)");
        flush();
    }
    if (!haveStart) throw ParseError("grammar has no rules");
    return g;
}

std::string formatGrammar(const Grammar& g) {
    std::string out;
    for (const auto& r : g.rules) {
        out += g.nonterminals[r.lhs] + " ->";
        if (r.rhs.empty()) out += " ε";
        for (const auto& s : r.rhs) out += " " + (s.terminal ? g.terminals[s.id] : g.nonterminals[s.id]);
        out += "\n";
    }
    return out;
}

}  // namespace wta
