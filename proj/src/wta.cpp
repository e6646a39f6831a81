#include "wta/wta.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wta {

Wta::Wta(RankedAlphabet alphabet, AlgebraPtr algebra, std::vector<std::string> states)
    : alphabet_(std::move(alphabet)), algebra_(std::move(algebra)), states_(std::move(states)) {
    if (!algebra_) throw std::invalid_argument("wta needs an algebra");
    bySymbol_.resize(alphabet_.size());
    roots_.assign(states_.size(), algebra_->zero());
}

std::optional<StateId> Wta::findState(std::string_view name) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == name) return static_cast<StateId>(i);
    return std::nullopt;
}

void Wta::checkState(StateId q) const {
    if (q < 0 || q >= numStates()) throw std::out_of_range("state " + std::to_string(q) + " out of range");
}

void Wta::setTransition(const std::vector<StateId>& children, SymbolId symbol, StateId target, Weight w) {
    if (symbol < 0 || symbol >= alphabet_.size()) throw std::out_of_range("symbol out of range");
    if (static_cast<int>(children.size()) != alphabet_.rank(symbol))
        throw std::invalid_argument("symbol " + alphabet_[symbol].name + " has rank " +
                                    std::to_string(alphabet_.rank(symbol)));
    for (StateId q : children) checkState(q);
    checkState(target);
    auto& list = bySymbol_[symbol];
    for (auto it = list.begin(); it != list.end(); ++it) {
        if (it->target == target && it->children == children) {
            if (algebra_->isZero(w))
                list.erase(it);
            else
                it->weight = std::move(w);
            return;
        }
    }
    if (!algebra_->isZero(w)) list.push_back({symbol, children, target, std::move(w)});
}

Weight Wta::transition(const std::vector<StateId>& children, SymbolId symbol, StateId target) const {
    for (const auto& t : bySymbol_.at(symbol))
        if (t.target == target && t.children == children) return t.weight;
    return algebra_->zero();
}

std::vector<Transition> Wta::transitions() const {
    std::vector<Transition> out;
    for (const auto& list : bySymbol_) out.insert(out.end(), list.begin(), list.end());
    return out;
}

std::size_t Wta::transitionCount() const {
    std::size_t n = 0;
    for (const auto& list : bySymbol_) n += list.size();
    return n;
}

void Wta::setRoot(StateId q, Weight w) {
    checkState(q);
    roots_[q] = std::move(w);
}

// ---------------------------------------------------------------- runs

std::vector<Run> runs(const Wta& a, const Term& t, std::optional<StateId> holeState) {
    if (t.isHole()) {
        if (holeState) return {Run{*holeState, {}}};
        std::vector<Run> out;
        for (StateId q = 0; q < a.numStates(); ++q) out.push_back(Run{q, {}});
        return out;
    }
    std::vector<std::vector<Run>> kids;
    for (const auto& c : t.children) kids.push_back(runs(a, c, holeState));
    std::vector<Run> out;
    for (const auto& tr : a.transitionsOf(t.symbol)) {
        Run r{tr.target, std::vector<Run>(t.children.size())};
        std::function<void(std::size_t)> pick = [&](std::size_t i) {
            if (i == t.children.size()) {
                out.push_back(r);
                return;
            }
            for (const auto& kr : kids[i]) {
                if (kr.state != tr.children[i]) continue;
                r.children[i] = kr;
                pick(i + 1);
            }
        };
        pick(0);
    }
    return out;
}

std::vector<Run> runsOnContext(const Wta& a, StateId q, const Term& c, StateId p) {
    std::vector<Run> out;
    for (auto& r : runs(a, c, p))
        if (r.state == q) out.push_back(std::move(r));
    return out;
}

bool isRun(const Wta& a, const Term& t, const Run& r) {
    if (r.state < 0 || r.state >= a.numStates()) return false;
    if (t.isHole()) return r.children.empty();
    if (r.children.size() != t.children.size()) return false;
    std::vector<StateId> kids;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (!isRun(a, t.children[i], r.children[i])) return false;
        kids.push_back(r.children[i].state);
    }
    return !a.algebra().isZero(a.transition(kids, t.symbol, r.state));
}

Weight weightOfRun(const Wta& a, const Term& t, const Run& r) {
    const Algebra& alg = a.algebra();
    if (t.isHole()) return alg.one();
    if (r.children.size() != t.children.size()) throw std::invalid_argument("run does not match the term");
    Weight acc = alg.one();
    std::vector<StateId> kids;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        acc = alg.mul(acc, weightOfRun(a, t.children[i], r.children[i]));
        kids.push_back(r.children[i].state);
    }
    Weight d = a.transition(kids, t.symbol, r.state);
    if (alg.isZero(d)) throw std::invalid_argument("not a run: uses a zero transition");
    return alg.mul(acc, d);
}

namespace {

// (state, run weight) -> number of runs
using RunTable = std::map<std::pair<StateId, Weight>, BigInt>;

RunTable runTable(const Wta& a, const Term& t) {
    if (t.isHole()) throw std::invalid_argument("evaluate expects a tree, got a context");
    const Algebra& alg = a.algebra();
    const std::size_t k = t.children.size();
    std::vector<std::map<StateId, std::vector<std::pair<Weight, BigInt>>>> kids(k);
    for (std::size_t i = 0; i < k; ++i)
        for (auto& [key, count] : runTable(a, t.children[i])) kids[i][key.first].emplace_back(key.second, count);
    RunTable out;
    for (const auto& tr : a.transitionsOf(t.symbol)) {
        std::function<void(std::size_t, const Weight&, const BigInt&)> pick = [&](std::size_t i, const Weight& acc,
                                                                                  const BigInt& count) {
            if (i == k) {
                out[{tr.target, alg.mul(acc, tr.weight)}] += count;
                return;
            }
            auto it = kids[i].find(tr.children[i]);
            if (it == kids[i].end()) return;
            for (const auto& [w, c] : it->second) pick(i + 1, alg.mul(acc, w), count * c);
        };
        pick(0, alg.one(), BigInt(1));
    }
    return out;
}

}  // namespace

Weight evaluate(const Wta& a, const Term& t) {
    const Algebra& alg = a.algebra();
    Weight total = alg.zero();
    for (const auto& [key, count] : runTable(a, t)) {
        const Weight& f = a.root(key.first);
        if (alg.isZero(f)) continue;
        total = alg.add(total, multiple(alg, count, alg.mul(key.second, f)));
    }
    return total;
}

// ---------------------------------------------------------------- contexts

SplitWeight splitWeight(const Wta& a, const Term& c, const Run& r) {
    const Algebra& alg = a.algebra();
    if (c.isHole()) return {alg.one(), alg.one()};
    int at = -1;
    for (std::size_t i = 0; i < c.children.size(); ++i)
        if (holeCount(c.children[i]) > 0) at = static_cast<int>(i);
    if (at < 0 || holeCount(c) != 1) throw std::invalid_argument("splitWeight expects a context");
    SplitWeight inner = splitWeight(a, c.children[at], r.children.at(at));
    Weight left = alg.one();
    for (int j = 0; j < at; ++j) left = alg.mul(left, weightOfRun(a, c.children[j], r.children[j]));
    left = alg.mul(left, inner.left);
    Weight right = inner.right;
    std::vector<StateId> kids;
    for (const auto& kr : r.children) kids.push_back(kr.state);
    for (std::size_t j = at + 1; j < c.children.size(); ++j)
        right = alg.mul(right, weightOfRun(a, c.children[j], r.children[j]));
    Weight d = a.transition(kids, c.symbol, r.state);
    if (alg.isZero(d)) throw std::invalid_argument("not a run: uses a zero transition");
    return {left, alg.mul(right, d)};
}

namespace {
Run& runAt(Run& r, const Position& p) {
    Run* cur = &r;
    for (int i : p) cur = &cur->children.at(i);
    return *cur;
}
}  // namespace

StateId exitState(const Term& c, const Run& r) {
    const Run* cur = &r;
    for (int i : holePosition(c)) cur = &cur->children.at(i);
    return cur->state;
}

Run combineRuns(const Term& c, const Run& rho, const Run& theta) {
    Run out = rho;
    Run& at = runAt(out, holePosition(c));
    if (at.state != theta.state)
        throw std::invalid_argument("exit state " + std::to_string(at.state) + " differs from root state " +
                                    std::to_string(theta.state));
    at = theta;
    return out;
}

Run powerRun(const Term& c, const Run& rho, int n) {
    Run out{exitState(c, rho), {}};
    for (int i = 0; i < n; ++i) out = combineRuns(c, rho, out);
    return out;
}

// ---------------------------------------------------------------- transformations

Wta mapWeights(const Wta& a, const Homomorphism& h) {
    Wta out(a.alphabet(), h.target, a.stateNames());
    for (const auto& t : a.transitions()) out.setTransition(t.children, t.symbol, t.target, h(t.weight));
    for (StateId q = 0; q < a.numStates(); ++q) out.setRoot(q, h(a.root(q)));
    return out;
}

Fta booleanProjection(const Wta& a) {
    Fta f;
    f.alphabet = a.alphabet();
    f.numStates = a.numStates();
    for (const auto& t : a.transitions()) f.addTransition(t.children, t.symbol, t.target);
    f.final.resize(a.numStates());
    for (StateId q = 0; q < a.numStates(); ++q) f.final[q] = !a.algebra().isZero(a.root(q));
    return f;
}

Wta asBooleanWta(const Fta& f) {
    std::vector<std::string> names;
    for (int q = 0; q < f.numStates; ++q) names.push_back("q" + std::to_string(q));
    Wta out(f.alphabet, algebras::boolean(), names);
    for (const auto& t : f.transitions) out.setTransition(t.children, t.symbol, t.target, Weight(1));
    for (int q = 0; q < f.numStates; ++q)
        if (f.final[q]) out.setRoot(q, Weight(1));
    return out;
}

std::vector<Weight> CrispDetWta::image() const {
    auto live = reachableStates(dfta);
    std::set<Weight> seen;
    for (int q = 0; q < dfta.numStates(); ++q)
        if (live[q]) seen.insert(outputs[q]);
    return {seen.begin(), seen.end()};
}

Term WsaEncoding::encode(const std::vector<int>& word) const {
    Term t = leaf(end);
    for (int letter : word) t = node(letterSymbols.at(letter), {std::move(t)});
    return t;
}

WsaEncoding fromWsa(const Wsa& w) {
    if (w.letters.empty()) throw std::invalid_argument("wsa needs at least one letter");
    std::vector<Symbol> symbols;
    for (const auto& l : w.letters) symbols.push_back({l, 1});
    std::string endName = "e";
    while (std::find(w.letters.begin(), w.letters.end(), endName) != w.letters.end()) endName += "_";
    symbols.push_back({endName, 0});
    RankedAlphabet alphabet(symbols);
    const SymbolId end = static_cast<SymbolId>(w.letters.size());
    Wta a(alphabet, w.algebra, w.states);
    const Algebra& alg = *w.algebra;
    for (StateId q = 0; q < static_cast<StateId>(w.states.size()); ++q) {
        a.setTransition({}, end, q, w.initial.at(q));
        a.setRoot(q, w.final.at(q));
    }
    for (const auto& e : w.edges) {
        Weight old = a.transition({e.from}, e.letter, e.to);
        a.setTransition({e.from}, e.letter, e.to, alg.add(old, e.weight));
    }
    std::vector<SymbolId> letters;
    for (std::size_t i = 0; i < w.letters.size(); ++i) letters.push_back(static_cast<SymbolId>(i));
    return WsaEncoding{std::move(a), end, std::move(letters)};
}

Wta fromCfg(const Grammar& g) {
    std::vector<Symbol> symbols;
    bool nullary = false;
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        int rank = 0;
        for (const auto& s : g.rules[i].rhs) rank += s.terminal ? 0 : 1;
        nullary = nullary || rank == 0;
        symbols.push_back({"r" + std::to_string(i), rank});
    }
    if (!nullary) throw EmptySemantics("grammar generates no word");
    auto alg = algebras::arctic();
    Wta a(RankedAlphabet(symbols), alg, g.nonterminals);
    for (std::size_t i = 0; i < g.rules.size(); ++i) {
        std::vector<StateId> kids;
        int terminals = 0;
        for (const auto& s : g.rules[i].rhs) {
            if (s.terminal)
                ++terminals;
            else
                kids.push_back(s.id);
        }
        a.setTransition(kids, static_cast<SymbolId>(i), g.rules[i].lhs, Weight(terminals));
    }
    a.setRoot(g.start, alg->one());
    return a;
}

}  // namespace wta
