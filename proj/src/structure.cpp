#include "wta/structure.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace wta {

Grammar toGrammar(const Wta& a) {
    Grammar g;
    std::string start = "S";
    while (a.findState(start)) start += "'";
    g.nonterminals = a.stateNames();
    g.start = g.nonterminal(start);
    for (StateId q = 0; q < a.numStates(); ++q)
        if (!a.algebra().isZero(a.root(q))) g.rules.push_back({g.start, {{false, q}}});
    const int open = g.terminal("("), comma = g.terminal(","), close = g.terminal(")");
    for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
        const int sym = g.terminal(a.alphabet()[s].name);
        for (const auto& t : a.transitionsOf(s)) {
            Rule r{t.target, {{true, sym}}};
            if (!t.children.empty()) {
                r.rhs.push_back({true, open});
                for (std::size_t i = 0; i < t.children.size(); ++i) {
                    if (i > 0) r.rhs.push_back({true, comma});
                    r.rhs.push_back({false, t.children[i]});
                }
                r.rhs.push_back({true, close});
            }
            g.rules.push_back(std::move(r));
        }
    }
    return g;
}

Grammar reduceGrammar(const Grammar& g) {
    const std::size_t n = g.nonterminals.size();
    std::vector<bool> productive(n, false);
    auto allProductive = [&](const Rule& r) {
        return std::all_of(r.rhs.begin(), r.rhs.end(), [&](const GrammarSymbol& s) { return s.terminal || productive[s.id]; });
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : g.rules)
            if (!productive[r.lhs] && allProductive(r)) productive[r.lhs] = changed = true;
    }
    std::vector<bool> reachable(n, false);
    reachable[g.start] = productive[g.start];
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : g.rules) {
            if (!reachable[r.lhs] || !allProductive(r)) continue;
            for (const auto& s : r.rhs)
                if (!s.terminal && !reachable[s.id]) reachable[s.id] = changed = true;
        }
    }
    Grammar out;
    std::vector<int> rename(n, -1);
    rename[g.start] = out.nonterminal(g.nonterminals[g.start]);
    out.start = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (reachable[i] && rename[i] < 0) rename[i] = out.nonterminal(g.nonterminals[i]);
    for (const auto& r : g.rules) {
        if (!reachable[r.lhs] || !allProductive(r)) continue;
        Rule nr{rename[r.lhs], {}};
        for (const auto& s : r.rhs)
            nr.rhs.push_back(s.terminal ? GrammarSymbol{true, out.terminal(g.terminals[s.id])}
                                        : GrammarSymbol{false, rename[s.id]});
        out.rules.push_back(std::move(nr));
    }
    return out;
}

bool hasUsefulState(const Wta& a) {
    auto u = usefulStates(booleanProjection(a));
    return std::any_of(u.begin(), u.end(), [](bool b) { return b; });
}

Wta trim(const Wta& a) {
    auto u = usefulStates(booleanProjection(a));
    std::vector<StateId> rename(a.numStates(), -1);
    std::vector<std::string> names;
    for (StateId q = 0; q < a.numStates(); ++q)
        if (u[q]) {
            rename[q] = static_cast<StateId>(names.size());
            names.push_back(a.stateName(q));
        }
    if (names.empty()) throw EmptySemantics("wta has no useful state");
    Wta out(a.alphabet(), a.algebraPtr(), names);
    for (const auto& t : a.transitions()) {
        if (rename[t.target] < 0) continue;
        std::vector<StateId> kids;
        for (StateId q : t.children) kids.push_back(rename[q]);
        if (std::any_of(kids.begin(), kids.end(), [](StateId q) { return q < 0; })) continue;
        out.setTransition(kids, t.symbol, rename[t.target], t.weight);
    }
    for (StateId q = 0; q < a.numStates(); ++q)
        if (u[q]) out.setRoot(rename[q], a.root(q));
    return out;
}

// ---------------------------------------------------------------- small loops

namespace {

struct Witness {
    Term term;
    Run run;
};
using Slot = std::optional<Witness>;

// Finds child colors (0: only one-weighted transitions, 1: some other
// transition) whose combination with the transition gives color want.
std::optional<std::vector<const Witness*>> pickColors(int k, const std::function<const Slot&(int, int)>& slot,
                                                      bool selfOne, int want) {
    std::vector<const Witness*> chosen(k);
    std::function<bool(int, bool)> rec = [&](int i, bool dirty) {
        if (i == k) return (dirty || !selfOne) == (want == 1);
        for (int c = 0; c < 2; ++c) {
            const Slot& s = slot(i, c);
            if (!s) continue;
            chosen[i] = &*s;
            if (rec(i + 1, dirty || c == 1)) return true;
        }
        return false;
    };
    if (!rec(0, false)) return std::nullopt;
    return chosen;
}

Witness build(const Transition& t, const std::vector<const Witness*>& kids) {
    Witness w{Term{t.symbol, {}}, Run{t.target, {}}};
    for (const auto* k : kids) {
        w.term.children.push_back(k->term);
        w.run.children.push_back(k->run);
    }
    return w;
}

}  // namespace

SmallLoopResult smallLoopAnalysis(const Wta& a) {
    const Algebra& alg = a.algebra();
    if (alg.flags().monotonic != Tri::True) throw NotApplicable("small-loop analysis needs a monotonic algebra");
    const int n = a.numStates();
    const auto trans = a.transitions();
    // trees[q][color], ctx[(q * n + p)][color] with p the hole state
    std::vector<std::array<Slot, 2>> trees(n);
    std::vector<std::array<Slot, 2>> ctx(static_cast<std::size_t>(n) * n);
    for (StateId p = 0; p < n; ++p) ctx[p * n + p][0] = Witness{hole(), Run{p, {}}};
    for (int h = 0; h <= n; ++h) {
        auto nextTrees = trees;
        auto nextCtx = ctx;
        for (const auto& t : trans) {
            const int k = static_cast<int>(t.children.size());
            const bool selfOne = alg.isOne(t.weight);
            for (int col = 0; col < 2; ++col) {
                if (!nextTrees[t.target][col]) {
                    auto kids = pickColors(
                        k, [&](int i, int c) -> const Slot& { return trees[t.children[i]][c]; }, selfOne, col);
                    if (kids) nextTrees[t.target][col] = build(t, *kids);
                }
                if (h == 0) continue;
                for (int at = 0; at < k; ++at)
                    for (StateId p = 0; p < n; ++p) {
                        auto& dst = nextCtx[t.target * n + p][col];
                        if (dst) continue;
                        auto kids = pickColors(
                            k,
                            [&](int i, int c) -> const Slot& {
                                return i == at ? ctx[t.children[i] * n + p][c] : trees[t.children[i]][c];
                            },
                            selfOne, col);
                        if (kids) dst = build(t, *kids);
                    }
            }
        }
        trees = std::move(nextTrees);
        ctx = std::move(nextCtx);
        if (h == 0) continue;
        for (StateId q = 0; q < n; ++q)
            if (const auto& w = ctx[q * n + q][1])
                return {false, LoopWitness{q, w->term, w->run, weightOfRun(a, w->term, w->run)}};
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------- pumping

namespace {

const Run& runAtPos(const Run& r, const Position& p) {
    const Run* cur = &r;
    for (int i : p) cur = &cur->children.at(i);
    return *cur;
}

Run replaceRunAt(const Run& r, const Position& p, Run z) {
    Run out = r;
    Run* cur = &out;
    for (int i : p) cur = &cur->children.at(i);
    *cur = std::move(z);
    return out;
}

std::vector<Position> longestPath(const Term& t) {
    std::vector<Position> path{{}};
    const Term* cur = &t;
    Position p;
    while (!cur->children.empty()) {
        int best = 0;
        for (std::size_t i = 1; i < cur->children.size(); ++i)
            if (height(cur->children[i]) > height(cur->children[best])) best = static_cast<int>(i);
        p.push_back(best);
        path.push_back(p);
        cur = &cur->children[best];
    }
    return path;
}

PumpDecomposition assemble(const Wta& a, const Term& xi, const Run& kappa, const Position& u, const Position& uw) {
    PumpDecomposition d;
    const StateId q = runAtPos(kappa, u).state;
    d.rootState = kappa.state;
    d.loopState = q;
    d.outer = replaceAt(xi, u, hole());
    d.outerRun = replaceRunAt(kappa, u, Run{q, {}});
    const Position w(uw.begin() + static_cast<long>(u.size()), uw.end());
    const Term& below = subtermAt(xi, u);
    d.loop = replaceAt(below, w, hole());
    d.loopRun = replaceRunAt(runAtPos(kappa, u), w, Run{q, {}});
    d.inner = subtermAt(xi, uw);
    d.innerRun = runAtPos(kappa, uw);
    d.outerSplit = splitWeight(a, d.outer, d.outerRun);
    d.loopSplit = splitWeight(a, d.loop, d.loopRun);
    return d;
}

}  // namespace

PumpDecomposition pumpDecompose(const Wta& a, const Term& xi, const Run& kappa) {
    const int n = a.numStates();
    const int h = height(xi);
    if (h < n) throw std::invalid_argument("pumping needs a tree of height at least |Q|");
    auto path = longestPath(xi);
    for (int i = h - n; i <= h; ++i)
        for (int j = i + 1; j <= h; ++j)
            if (runAtPos(kappa, path[i]).state == runAtPos(kappa, path[j]).state)
                return assemble(a, xi, kappa, path[i], path[j]);
    throw std::logic_error("no repeated state on the path");
}

std::pair<Term, Run> pump(const PumpDecomposition& d, int n) {
    Term middle = substitute(power(d.loop, n), d.inner);
    Run middleRun = combineRuns(power(d.loop, n), powerRun(d.loop, d.loopRun, n), d.innerRun);
    return {substitute(d.outer, middle), combineRuns(d.outer, d.outerRun, middleRun)};
}

PumpDecomposition embedLoop(const Wta& a, const LoopWitness& w) {
    const Algebra& alg = a.algebra();
    const int n = a.numStates();
    const auto trans = a.transitions();
    std::vector<Slot> below(n);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& t : trans) {
            if (below[t.target]) continue;
            std::vector<const Witness*> kids;
            for (StateId q : t.children)
                if (below[q]) kids.push_back(&*below[q]);
            if (kids.size() != t.children.size()) continue;
            below[t.target] = build(t, kids);
            changed = true;
        }
    }
    // above[q]: context from a state with nonzero root weight down to q
    std::vector<Slot> above(n);
    for (StateId q = 0; q < n; ++q)
        if (!alg.isZero(a.root(q)) && below[q]) above[q] = Witness{hole(), Run{q, {}}};
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& t : trans) {
            if (!above[t.target]) continue;
            if (!std::all_of(t.children.begin(), t.children.end(), [&](StateId q) { return below[q].has_value(); }))
                continue;
            for (std::size_t i = 0; i < t.children.size(); ++i) {
                const StateId qi = t.children[i];
                if (above[qi]) continue;
                Witness step{Term{t.symbol, {}}, Run{t.target, {}}};
                for (std::size_t j = 0; j < t.children.size(); ++j) {
                    step.term.children.push_back(j == i ? hole() : below[t.children[j]]->term);
                    step.run.children.push_back(j == i ? Run{qi, {}} : below[t.children[j]]->run);
                }
                const auto& up = *above[t.target];
                above[qi] = Witness{substitute(up.term, step.term), combineRuns(up.term, up.run, step.run)};
                changed = true;
            }
        }
    }
    if (!below[w.state] || !above[w.state]) throw NotApplicable("loop state is not useful");
    PumpDecomposition d;
    d.outer = above[w.state]->term;
    d.outerRun = above[w.state]->run;
    d.rootState = d.outerRun.state;
    d.loopState = w.state;
    d.loop = w.context;
    d.loopRun = w.run;
    d.inner = below[w.state]->term;
    d.innerRun = below[w.state]->run;
    d.outerSplit = splitWeight(a, d.outer, d.outerRun);
    d.loopSplit = splitWeight(a, d.loop, d.loopRun);
    return d;
}

std::pair<Term, Run> reduceRun(const Wta& a, const Term& xi, const Run& kappa) {
    if (!smallLoopAnalysis(a).allOne) throw NotApplicable("reduceRun needs small loops of weight one");
    std::pair<Term, Run> cur{xi, kappa};
    while (height(cur.first) > a.numStates()) cur = pump(pumpDecompose(a, cur.first, cur.second), 0);
    return cur;
}

// ---------------------------------------------------------------- H and C

ReachabilitySets computeHC(const Wta& a, int fuel) {
    const Algebra& alg = a.algebra();
    const int n = a.numStates();
    const auto trans = a.transitions();
    ReachabilitySets out;
    std::vector<std::set<Weight>> layer(n);
    bool stable = false;
    int i = 0;
    for (; i < fuel && !stable; ++i) {
        auto next = layer;
        for (const auto& t : trans) {
            std::function<void(std::size_t, const Weight&)> rec = [&](std::size_t j, const Weight& acc) {
                if (j == t.children.size()) {
                    next[t.target].insert(alg.mul(acc, t.weight));
                    return;
                }
                for (const auto& y : layer[t.children[j]]) rec(j + 1, alg.mul(acc, y));
            };
            rec(0, alg.one());
        }
        stable = next == layer;
        if (!stable && i + 1 == fuel) {
            out.lastGrowth.clear();
            for (StateId q = 0; q < n; ++q)
                for (const auto& y : next[q])
                    if (!layer[q].count(y)) out.lastGrowth.push_back(y);
        }
        layer = std::move(next);
    }
    out.diverged = !stable;
    out.layers = stable ? std::max(0, i - 2) : i - 1;
    out.perState = layer;
    for (StateId q = 0; q < n; ++q) {
        const bool live = !alg.isZero(a.root(q));
        for (const auto& y : layer[q]) {
            out.runWeights.insert(y);
            out.completeWeights.insert(alg.mul(y, a.root(q)));
            if (live) out.costSet.insert(y);
        }
    }
    return out;
}

}  // namespace wta
