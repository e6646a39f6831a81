#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "wta/fta.hpp"

namespace wta::detail {

// calls f on every k-tuple over [0, hi) having some component in [lo, hi)
template <class F>
void forFreshTuples(int k, int lo, int hi, F&& f) {
    std::vector<StateId> idx(k);
    for (int first = 0; first < k; ++first) {
        if (lo >= hi) return;
        std::function<void(int)> rec = [&](int i) {
            if (i == k) {
                f(idx);
                return;
            }
            int from = 0, to = hi;
            if (i < first) to = lo;
            if (i == first) from = lo;
            for (int v = from; v < to; ++v) {
                idx[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

// Builds the reachable part of a deterministic automaton whose states are
// keys. step(symbol, child keys) yields the target key.
template <class Key, class Step>
Dfta explore(const RankedAlphabet& alphabet, std::vector<Key>& keys, Step step) {
    std::map<Key, StateId> index;
    for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], static_cast<StateId>(i));
    std::vector<std::tuple<SymbolId, std::vector<StateId>, StateId>> edges;
    auto intern = [&](Key k) {
        auto [it, fresh] = index.emplace(k, static_cast<StateId>(keys.size()));
        if (fresh) keys.push_back(std::move(k));
        return it->second;
    };
    int lo = 0;
    bool first = true;
    while (first || lo < static_cast<int>(keys.size())) {
        const int hi = static_cast<int>(keys.size());
        for (SymbolId s = 0; s < alphabet.size(); ++s) {
            const int k = alphabet.rank(s);
            if (k == 0) {
                if (first) {
                    StateId t = intern(step(s, std::vector<const Key*>{}));
                    edges.emplace_back(s, std::vector<StateId>{}, t);
                }
                continue;
            }
            forFreshTuples(k, lo, hi, [&](const std::vector<StateId>& idx) {
                std::vector<Key> kidsCopy;
                kidsCopy.reserve(k);
                for (StateId i : idx) kidsCopy.push_back(keys[i]);
                std::vector<const Key*> kids;
                for (auto& kk : kidsCopy) kids.push_back(&kk);
                StateId t = intern(step(s, kids));
                edges.emplace_back(s, idx, t);
            });
        }
        lo = hi;
        first = false;
    }
    Dfta out(alphabet, static_cast<int>(keys.size()));
    for (auto& [s, kids, t] : edges) out.setTransition(s, kids, t);
    return out;
}

}  // namespace wta::detail
