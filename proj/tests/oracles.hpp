#pragma once

// Brute-force reference implementations. Nothing here calls the library's
// algorithms; only the data structures (Term, Wta, Fta, Grammar) and the
// algebra operations are shared.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wta/fta.hpp"
#include "wta/grammar.hpp"
#include "wta/wta.hpp"

namespace oracle {

using namespace wta;

// every tree of height <= maxHeight (height of a leaf is 0)
inline std::vector<Term> trees(const RankedAlphabet& sigma, int maxHeight) {
    std::vector<Term> all;
    for (SymbolId s = 0; s < sigma.size(); ++s)
        if (sigma.rank(s) == 0) all.push_back(Term{s, {}});
    std::size_t prevEnd = 0;  // trees before this index have height < h-1
    for (int h = 1; h <= maxHeight; ++h) {
        const std::vector<Term> lower = all;
        const std::size_t fresh = prevEnd;
        prevEnd = lower.size();
        for (SymbolId s = 0; s < sigma.size(); ++s) {
            const int k = sigma.rank(s);
            if (k == 0) continue;
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                // at least one child of height exactly h-1
                bool tall = false;
                for (auto i : idx) tall = tall || i >= fresh;
                if (tall) {
                    Term t{s, {}};
                    for (auto i : idx) t.children.push_back(lower[i]);
                    all.push_back(std::move(t));
                }
                int i = 0;
                while (i < k && ++idx[i] == lower.size()) idx[i++] = 0;
                if (i == k) break;
            }
        }
    }
    return all;
}

// every (state, weight) pair of every run on t, one entry per run
inline std::vector<std::pair<StateId, Weight>> allRuns(const Wta& a, const Term& t) {
    const Algebra& alg = a.algebra();
    std::vector<std::vector<std::pair<StateId, Weight>>> kids;
    for (const auto& c : t.children) kids.push_back(allRuns(a, c));
    std::vector<std::pair<StateId, Weight>> out;
    std::vector<StateId> labels(kids.size());
    std::function<void(std::size_t, Weight)> rec = [&](std::size_t i, Weight acc) {
        if (i == kids.size()) {
            for (StateId q = 0; q < a.numStates(); ++q) {
                const Weight w = a.transition(labels, t.symbol, q);
                if (!alg.isZero(w)) out.emplace_back(q, alg.mul(acc, w));
            }
            return;
        }
        for (const auto& [q, w] : kids[i]) {
            labels[i] = q;
            rec(i + 1, alg.mul(acc, w));
        }
    };
    rec(0, alg.one());
    return out;
}

inline Weight value(const Wta& a, const Term& t) {
    const Algebra& alg = a.algebra();
    Weight sum = alg.zero();
    for (const auto& [q, w] : allRuns(a, t)) sum = alg.add(sum, alg.mul(w, a.root(q)));
    return sum;
}

// number of runs whose complete weight is b
inline BigInt runsWithWeight(const Wta& a, const Term& t, const Weight& b) {
    BigInt n = 0;
    for (const auto& [q, w] : allRuns(a, t))
        if (!a.algebra().isZero(a.root(q)) && a.algebra().mul(w, a.root(q)) == b) ++n;
    return n;
}

// weight of a given state labeling, recomputed from the definition
inline Weight runWeight(const Wta& a, const Term& t, const Run& r) {
    const Algebra& alg = a.algebra();
    Weight acc = alg.one();
    std::vector<StateId> labels;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        acc = alg.mul(acc, runWeight(a, t.children[i], r.children[i]));
        labels.push_back(r.children[i].state);
    }
    return alg.mul(acc, a.transition(labels, t.symbol, r.state));
}

// run counts per state
inline std::vector<BigInt> ftaRuns(const Fta& f, const Term& t) {
    std::vector<std::vector<BigInt>> kids;
    for (const auto& c : t.children) kids.push_back(ftaRuns(f, c));
    std::vector<BigInt> out(f.numStates, 0);
    for (const auto& tr : f.transitions) {
        if (tr.symbol != t.symbol) continue;
        BigInt n = 1;
        for (std::size_t i = 0; i < kids.size(); ++i) n *= kids[i][tr.children[i]];
        out[tr.target] += n;
    }
    return out;
}

inline BigInt acceptingRuns(const Fta& f, const Term& t) {
    const auto counts = ftaRuns(f, t);
    BigInt n = 0;
    for (int q = 0; q < f.numStates; ++q)
        if (f.final[q]) n += counts[q];
    return n;
}

inline bool accepts(const Fta& f, const Term& t) { return acceptingRuns(f, t) > 0; }

// Largest number of accepting runs over trees of height <= h, for each h up
// to maxHeight. Run-count vectors are kept as a Pareto front since the
// accepting count is monotone in the children's vectors.
inline std::vector<BigInt> maxAcceptingRuns(const Fta& f, int maxHeight) {
    using Vec = std::vector<BigInt>;
    auto dominated = [](const Vec& a, const Vec& b) {  // a <= b pointwise
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    auto prune = [&](std::vector<Vec> vs) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::vector<Vec> front;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            bool keep = true;
            for (std::size_t j = 0; j < vs.size() && keep; ++j)
                if (i != j && dominated(vs[i], vs[j])) keep = false;
            if (keep) front.push_back(vs[i]);
        }
        return front;
    };
    auto step = [&](SymbolId s, const std::vector<const Vec*>& kids) {
        Vec out(f.numStates, 0);
        for (const auto& tr : f.transitions) {
            if (tr.symbol != s) continue;
            BigInt n = 1;
            for (std::size_t i = 0; i < kids.size(); ++i) n *= (*kids[i])[tr.children[i]];
            out[tr.target] += n;
        }
        return out;
    };
    std::vector<Vec> front;
    for (SymbolId s = 0; s < f.alphabet.size(); ++s)
        if (f.alphabet.rank(s) == 0) front.push_back(step(s, {}));
    front = prune(front);
    auto best = [&] {
        BigInt m = 0;
        for (const auto& v : front) {
            BigInt n = 0;
            for (int q = 0; q < f.numStates; ++q)
                if (f.final[q]) n += v[q];
            m = std::max(m, n);
        }
        return m;
    };
    std::vector<BigInt> out{best()};
    for (int h = 1; h <= maxHeight; ++h) {
        std::vector<Vec> next = front;
        for (SymbolId s = 0; s < f.alphabet.size(); ++s) {
            const int k = f.alphabet.rank(s);
            if (k == 0) continue;
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                std::vector<const Vec*> kids;
                for (auto i : idx) kids.push_back(&front[i]);
                next.push_back(step(s, kids));
                int i = 0;
                while (i < k && ++idx[i] == front.size()) idx[i++] = 0;
                if (i == k) break;
            }
        }
        front = prune(next);
        out.push_back(best());
    }
    return out;
}

// all words of length <= maxLen, as terminal index sequences
inline std::set<std::vector<int>> words(const Grammar& g, std::size_t maxLen) {
    using Word = std::vector<int>;
    std::vector<std::set<Word>> lang(g.nonterminals.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            std::set<Word> acc{Word{}};
            for (const auto& sym : r.rhs) {
                std::set<Word> next;
                for (const auto& w : acc) {
                    if (sym.terminal) {
                        if (w.size() + 1 > maxLen) continue;
                        Word x = w;
                        x.push_back(sym.id);
                        next.insert(std::move(x));
                    } else {
                        for (const auto& v : lang[sym.id]) {
                            if (w.size() + v.size() > maxLen) continue;
                            Word x = w;
                            x.insert(x.end(), v.begin(), v.end());
                            next.insert(std::move(x));
                        }
                    }
                }
                acc = std::move(next);
            }
            for (const auto& w : acc) changed = lang[r.lhs].insert(w).second || changed;
        }
    }
    return g.nonterminals.empty() ? std::set<Word>{} : lang[g.start];
}

}  // namespace oracle
