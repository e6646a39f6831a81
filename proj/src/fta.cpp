#include "wta/fta.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wta/detail/explore.hpp"
#include "wta/errors.hpp"

namespace wta {

void Fta::addTransition(const std::vector<StateId>& children, SymbolId symbol, StateId target) {
    FtaTransition t{symbol, children, target};
    if (std::find(transitions.begin(), transitions.end(), t) == transitions.end()) transitions.push_back(std::move(t));
}

Dfta::Dfta(RankedAlphabet alphabet, int numStates)
    : accepting(numStates, false), alphabet_(std::move(alphabet)), numStates_(numStates) {
    tables_.resize(alphabet_.size());
}

StateId Dfta::addState() {
    accepting.push_back(false);
    return numStates_++;
}

void Dfta::setTransition(SymbolId symbol, const std::vector<StateId>& children, StateId target) {
    if (static_cast<int>(children.size()) != alphabet_.rank(symbol)) throw std::invalid_argument("rank mismatch");
    tables_.at(symbol)[children] = target;
}

std::optional<StateId> Dfta::transition(SymbolId symbol, const std::vector<StateId>& children) const {
    const auto& tab = tables_.at(symbol);
    auto it = tab.find(children);
    if (it == tab.end()) return std::nullopt;
    return it->second;
}

bool Dfta::isComplete() const {
    for (SymbolId s = 0; s < alphabet_.size(); ++s) {
        std::size_t need = 1;
        for (int i = 0; i < alphabet_.rank(s); ++i) need *= numStates_;
        if (tables_[s].size() != need) return false;
    }
    return true;
}

StateId Dfta::run(const Term& t) const {
    if (t.isHole()) throw std::invalid_argument("cannot run a dfta on a context");
    std::vector<StateId> kids;
    for (const auto& c : t.children) kids.push_back(run(c));
    auto q = transition(t.symbol, kids);
    if (!q) throw std::logic_error("dfta has no transition for " + alphabet_[t.symbol].name);
    return *q;
}

Dfta determinize(const Fta& a) {
    std::vector<std::vector<const FtaTransition*>> bySymbol(a.alphabet.size());
    for (const auto& t : a.transitions) bySymbol.at(t.symbol).push_back(&t);
    using Subset = std::vector<bool>;
    std::vector<Subset> keys{Subset(a.numStates, false)};
    Dfta d = detail::explore(a.alphabet, keys, [&](SymbolId s, const std::vector<const Subset*>& kids) {
        Subset out(a.numStates, false);
        for (const auto* t : bySymbol[s]) {
            bool ok = true;
            for (std::size_t i = 0; ok && i < kids.size(); ++i) ok = (*kids[i])[t->children[i]];
            if (ok) out[t->target] = true;
        }
        return out;
    });
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (int q = 0; q < a.numStates; ++q)
            if (keys[i][q] && a.final[q]) d.accepting[i] = true;
    return d;
}

namespace {
Dfta singleState(const RankedAlphabet& alphabet, bool accept) {
    Dfta d(alphabet, 1);
    for (SymbolId s = 0; s < alphabet.size(); ++s) d.setTransition(s, std::vector<StateId>(alphabet.rank(s), 0), 0);
    d.accepting[0] = accept;
    return d;
}
}  // namespace

Dfta universalDfta(const RankedAlphabet& alphabet) { return singleState(alphabet, true); }
Dfta emptyDfta(const RankedAlphabet& alphabet) { return singleState(alphabet, false); }

Dfta complement(const Dfta& a) {
    Dfta out = a;
    out.accepting.flip();
    return out;
}

ProductDfta product(const std::vector<const Dfta*>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty product");
    const RankedAlphabet& alphabet = parts[0]->alphabet();
    for (const auto* p : parts)
        if (!(p->alphabet() == alphabet)) throw std::invalid_argument("product of automata over different alphabets");
    using Tuple = std::vector<StateId>;
    std::vector<Tuple> keys;
    Dfta d = detail::explore(alphabet, keys, [&](SymbolId s, const std::vector<const Tuple*>& kids) {
        Tuple out(parts.size());
        std::vector<StateId> ch(kids.size());
        for (std::size_t j = 0; j < parts.size(); ++j) {
            for (std::size_t i = 0; i < kids.size(); ++i) ch[i] = (*kids[i])[j];
            auto t = parts[j]->transition(s, ch);
            if (!t) throw std::logic_error("product of incomplete dfta");
            out[j] = *t;
        }
        return out;
    });
    return {std::move(d), std::move(keys)};
}

Dfta combine(const Dfta& a, const Dfta& b, CombineMode mode) {
    auto p = product({&a, &b});
    for (std::size_t i = 0; i < p.tuples.size(); ++i) {
        const bool x = a.accepting[p.tuples[i][0]];
        const bool y = b.accepting[p.tuples[i][1]];
        switch (mode) {
            case CombineMode::Intersect: p.dfta.accepting[i] = x && y; break;
            case CombineMode::Union: p.dfta.accepting[i] = x || y; break;
            case CombineMode::Difference: p.dfta.accepting[i] = x && !y; break;
        }
    }
    return std::move(p.dfta);
}

std::vector<bool> reachableStates(const Dfta& a) {
    std::vector<bool> seen(a.numStates(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (SymbolId s = 0; s < a.alphabet().size(); ++s)
            for (const auto& [kids, t] : a.table(s)) {
                if (seen[t]) continue;
                if (std::all_of(kids.begin(), kids.end(), [&](StateId q) { return seen[q]; })) {
                    seen[t] = true;
                    changed = true;
                }
            }
    }
    return seen;
}

bool isEmpty(const Dfta& a) {
    auto r = reachableStates(a);
    for (int q = 0; q < a.numStates(); ++q)
        if (r[q] && a.accepting[q]) return false;
    return true;
}

bool isUniversal(const Dfta& a) { return isEmpty(complement(a)); }

bool equivalent(const Dfta& a, const Dfta& b) {
    auto p = product({&a, &b});
    for (const auto& t : p.tuples)
        if (a.accepting[t[0]] != b.accepting[t[1]]) return false;
    return true;
}

bool member(const Dfta& a, const Term& t) { return a.accepts(t); }

// ---------------------------------------------------------------- fta

std::vector<bool> productiveStates(const Fta& a) {
    std::vector<bool> prod(a.numStates, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : a.transitions) {
            if (prod[t.target]) continue;
            if (std::all_of(t.children.begin(), t.children.end(), [&](StateId q) { return prod[q]; })) {
                prod[t.target] = true;
                changed = true;
            }
        }
    }
    return prod;
}

std::vector<bool> usefulStates(const Fta& a) {
    auto prod = productiveStates(a);
    std::vector<bool> useful(a.numStates, false);
    for (int q = 0; q < a.numStates; ++q) useful[q] = prod[q] && a.final[q];
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : a.transitions) {
            if (!useful[t.target]) continue;
            if (!std::all_of(t.children.begin(), t.children.end(), [&](StateId q) { return prod[q]; })) continue;
            for (StateId q : t.children)
                if (!useful[q]) {
                    useful[q] = true;
                    changed = true;
                }
        }
    }
    return useful;
}

bool isTrim(const Fta& a) {
    auto u = usefulStates(a);
    return std::all_of(u.begin(), u.end(), [](bool b) { return b; });
}

Fta trim(const Fta& a) {
    auto u = usefulStates(a);
    std::vector<StateId> rename(a.numStates, -1);
    Fta out;
    out.alphabet = a.alphabet;
    for (int q = 0; q < a.numStates; ++q)
        if (u[q]) {
            rename[q] = out.numStates++;
            out.final.push_back(a.final[q]);
        }
    for (const auto& t : a.transitions) {
        if (rename[t.target] < 0) continue;
        std::vector<StateId> kids;
        bool ok = true;
        for (StateId q : t.children) {
            ok = ok && rename[q] >= 0;
            kids.push_back(rename[q]);
        }
        if (ok) out.addTransition(kids, t.symbol, rename[t.target]);
    }
    return out;
}

bool isEmpty(const Fta& a) {
    auto p = productiveStates(a);
    for (int q = 0; q < a.numStates; ++q)
        if (p[q] && a.final[q]) return false;
    return true;
}

std::vector<BigInt> countRuns(const Fta& a, const Term& t) {
    if (t.isHole()) throw std::invalid_argument("countRuns expects a tree");
    std::vector<std::vector<BigInt>> kids;
    for (const auto& c : t.children) kids.push_back(countRuns(a, c));
    std::vector<BigInt> out(a.numStates, 0);
    for (const auto& tr : a.transitions) {
        if (tr.symbol != t.symbol) continue;
        BigInt n = 1;
        for (std::size_t i = 0; i < kids.size() && n != 0; ++i) n *= kids[i][tr.children[i]];
        out[tr.target] += n;
    }
    return out;
}

BigInt countAcceptingRuns(const Fta& a, const Term& t) {
    auto c = countRuns(a, t);
    BigInt n = 0;
    for (int q = 0; q < a.numStates; ++q)
        if (a.final[q]) n += c[q];
    return n;
}

bool member(const Fta& a, const Term& t) { return countAcceptingRuns(a, t) != 0; }

bool isDeterministic(const Fta& a) {
    std::map<std::pair<SymbolId, std::vector<StateId>>, StateId> seen;
    for (const auto& t : a.transitions) {
        auto [it, fresh] = seen.emplace(std::make_pair(t.symbol, t.children), t.target);
        if (!fresh && it->second != t.target) return false;
    }
    return true;
}

bool isUnambiguous(const Fta& a) {
    // pairs of runs on a common tree: (p, q, the runs differ somewhere)
    std::set<std::tuple<StateId, StateId, bool>> items;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t1 : a.transitions)
            for (const auto& t2 : a.transitions) {
                if (t1.symbol != t2.symbol) continue;
                bool all = true, allSame = true, anyDiff = false;
                for (std::size_t i = 0; all && i < t1.children.size(); ++i) {
                    const bool d0 = items.count({t1.children[i], t2.children[i], false}) > 0;
                    const bool d1 = items.count({t1.children[i], t2.children[i], true}) > 0;
                    all = d0 || d1;
                    allSame = allSame && d0;
                    anyDiff = anyDiff || d1;
                }
                if (!all) continue;
                if ((t1.target != t2.target || anyDiff) && items.insert({t1.target, t2.target, true}).second)
                    changed = true;
                if (allSame && t1 == t2 && items.insert({t1.target, t2.target, false}).second) changed = true;
            }
    }
    for (const auto& [p, q, d] : items)
        if (d && a.final[p] && a.final[q]) return false;
    return true;
}

namespace {

// Saturation over N-tuples of runs on a common term that contains at most
// one hole; the hole of component j carries holeLabels[j]. Every item keeps
// the first term and runs that produced it.
struct SatKey {
    std::vector<StateId> states;
    bool hole = false;
    bool diff = false;
    auto operator<=>(const SatKey&) const = default;
};

struct SatProof {
    Term term;
    std::vector<Run> runs;
};

std::optional<SatProof> saturate(const Fta& a, const std::vector<StateId>& holeLabels, bool trackDiff,
                                 const std::function<bool(const SatKey&)>& goal) {
    const std::size_t n = holeLabels.size();
    std::map<SatKey, SatProof> items;
    // states -> keys present with those states
    std::map<std::vector<StateId>, std::vector<SatKey>> byStates;
    auto add = [&](SatKey k, SatProof p) {
        if (items.count(k)) return false;
        byStates[k.states].push_back(k);
        items.emplace(std::move(k), std::move(p));
        return true;
    };
    {
        SatProof p{hole(), {}};
        for (StateId h : holeLabels) p.runs.push_back(Run{h, {}});
        SatKey k{holeLabels, true, false};
        if (goal(k)) return p;
        add(k, p);
    }
    std::vector<std::vector<const FtaTransition*>> bySymbol(a.alphabet.size());
    for (const auto& t : a.transitions) bySymbol.at(t.symbol).push_back(&t);

    bool changed = true;
    while (changed) {
        changed = false;
        for (SymbolId s = 0; s < a.alphabet.size(); ++s) {
            const auto& ts = bySymbol[s];
            if (ts.empty()) continue;
            const int k = a.alphabet.rank(s);
            std::vector<const FtaTransition*> pick(n);
            std::function<std::optional<SatProof>(std::size_t)> chooseT = [&](std::size_t j) -> std::optional<SatProof> {
                if (j < n) {
                    for (const auto* t : ts) {
                        pick[j] = t;
                        if (auto r = chooseT(j + 1)) return r;
                    }
                    return std::nullopt;
                }
                std::vector<const SatKey*> kids(k);
                std::function<std::optional<SatProof>(int, bool, bool)> chooseK =
                    [&](int i, bool hole, bool diff) -> std::optional<SatProof> {
                    if (i == k) {
                        SatKey key;
                        for (const auto* t : pick) key.states.push_back(t->target);
                        key.hole = hole;
                        if (trackDiff) {
                            bool rootDiff = false;
                            for (std::size_t j2 = 1; j2 < n; ++j2) rootDiff = rootDiff || key.states[j2] != key.states[0];
                            key.diff = diff || rootDiff;
                        }
                        if (items.count(key)) return std::nullopt;
                        SatProof p;
                        p.term.symbol = s;
                        for (int c = 0; c < k; ++c) p.term.children.push_back(items.at(*kids[c]).term);
                        for (std::size_t j2 = 0; j2 < n; ++j2) {
                            Run r{pick[j2]->target, {}};
                            for (int c = 0; c < k; ++c) r.children.push_back(items.at(*kids[c]).runs[j2]);
                            p.runs.push_back(std::move(r));
                        }
                        if (goal(key)) return p;
                        add(key, std::move(p));
                        changed = true;
                        return std::nullopt;
                    }
                    std::vector<StateId> want(n);
                    for (std::size_t j2 = 0; j2 < n; ++j2) want[j2] = pick[j2]->children[i];
                    auto it = byStates.find(want);
                    if (it == byStates.end()) return std::nullopt;
                    const auto candidates = it->second;
                    for (const auto& key : candidates) {
                        if (hole && key.hole) continue;
                        kids[i] = &items.find(key)->first;
                        if (auto r = chooseK(i + 1, hole || key.hole, diff || key.diff)) return r;
                    }
                    return std::nullopt;
                };
                return chooseK(0, false, false);
            };
            if (auto r = chooseT(0)) return r;
        }
    }
    return std::nullopt;
}

}  // namespace

AmbiguityVerdict finitelyAmbiguous(const Fta& a) {
    if (!isTrim(a)) throw NotApplicable("finite ambiguity check needs a trim automaton");
    for (StateId p = 0; p < a.numStates; ++p) {
        auto proof = saturate(a, {p, p}, true, [&](const SatKey& k) {
            return k.hole && k.diff && k.states[0] == p && k.states[1] == p;
        });
        if (proof)
            return {false, AmbiguityPattern{AmbiguityPattern::Kind::TwoLoops, p, p, proof->term, proof->runs}};
    }
    for (StateId p = 0; p < a.numStates; ++p)
        for (StateId q = 0; q < a.numStates; ++q) {
            if (p == q) continue;
            auto proof = saturate(a, {p, q, q}, false, [&](const SatKey& k) {
                return k.hole && k.states == std::vector<StateId>{p, p, q};
            });
            if (proof)
                return {false, AmbiguityPattern{AmbiguityPattern::Kind::Branching, p, q, proof->term, proof->runs}};
        }
    return {true, std::nullopt};
}

}  // namespace wta
