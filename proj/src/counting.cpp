#include "wta/counting.hpp"

#include <functional>

#include "wta/detail/explore.hpp"

namespace wta {

CountingWta buildCountingWta(const Wta& a, const std::set<Weight>& tracked, const Weight& target) {
    const Algebra& alg = a.algebra();
    const std::vector<Weight> ys(tracked.begin(), tracked.end());
    const int m = static_cast<int>(ys.size());
    auto id = [&](StateId q, int y) { return q * m + y; };
    std::vector<std::string> names;
    std::vector<std::pair<StateId, Weight>> labels;
    for (StateId q = 0; q < a.numStates(); ++q)
        for (int y = 0; y < m; ++y) {
            names.push_back(a.stateName(q) + "|" + alg.show(ys[y]));
            labels.emplace_back(q, ys[y]);
        }
    auto nat = algebras::naturals();
    Wta out(a.alphabet(), nat, names);
    if (m == 0) return {std::move(out), target, std::move(labels)};
    auto yIndex = [&](const Weight& w) -> int {
        auto it = tracked.find(w);
        if (it == tracked.end()) return -1;
        return static_cast<int>(std::distance(tracked.begin(), it));
    };
    for (const auto& t : a.transitions()) {
        const std::size_t k = t.children.size();
        std::vector<int> pick(k, 0);
        std::function<void(std::size_t, const Weight&)> rec = [&](std::size_t i, const Weight& acc) {
            if (i == k) {
                const int y = yIndex(alg.mul(acc, t.weight));
                if (y < 0) return;
                std::vector<StateId> kids;
                for (std::size_t j = 0; j < k; ++j) kids.push_back(id(t.children[j], pick[j]));
                out.setTransition(kids, t.symbol, id(t.target, y), Weight(1));
                return;
            }
            for (int y = 0; y < m; ++y) {
                pick[i] = y;
                rec(i + 1, alg.mul(acc, ys[y]));
            }
        };
        rec(0, alg.one());
    }
    for (StateId q = 0; q < a.numStates(); ++q)
        for (int y = 0; y < m; ++y)
            if (alg.mul(ys[y], a.root(q)) == target) out.setRoot(id(q, y), Weight(1));
    return {std::move(out), target, std::move(labels)};
}

CrispDetWta vectorDeterminize(const Wta& a) {
    const Algebra& alg = a.algebra();
    const Flags& f = alg.flags();
    if (!alg.carrier()) throw NotApplicable("vector determinization needs a finite algebra");
    if (f.left_distributive != Tri::True || f.right_distributive != Tri::True)
        throw NotApplicable("vector determinization needs a distributive algebra");
    const int n = a.numStates();
    using Vec = std::vector<Weight>;
    std::vector<Vec> keys;
    Dfta d = detail::explore(a.alphabet(), keys, [&](SymbolId s, const std::vector<const Vec*>& kids) {
        Vec out(n, alg.zero());
        for (const auto& t : a.transitionsOf(s)) {
            Weight w = alg.one();
            for (std::size_t i = 0; i < kids.size(); ++i) w = alg.mul(w, (*kids[i])[t.children[i]]);
            out[t.target] = alg.add(out[t.target], alg.mul(w, t.weight));
        }
        return out;
    });
    std::vector<Weight> outputs;
    for (const auto& v : keys) {
        Weight o = alg.zero();
        for (StateId q = 0; q < n; ++q) o = alg.add(o, alg.mul(v[q], a.root(q)));
        outputs.push_back(std::move(o));
    }
    return {std::move(d), a.algebraPtr(), std::move(outputs)};
}

namespace {

void requireNaturals(const Wta& a) {
    if (a.algebra().kind() != "naturals") throw NotApplicable("expected a wta over the naturals");
}

// trees mapped to the class of value under the quotient
Dfta classPreimage(const Wta& a, const Quotient& qt, unsigned value) {
    CrispDetWta c = vectorDeterminize(mapWeights(a, qt.hom));
    const Weight want = qt.hom(Weight(BigInt(value)));
    for (std::size_t i = 0; i < c.outputs.size(); ++i) c.dfta.accepting[i] = c.outputs[i] == want;
    return std::move(c.dfta);
}

}  // namespace

Dfta natPreimage(const Wta& a, const NatTarget& target) {
    requireNaturals(a);
    const AlgebraPtr& nat = a.algebraPtr();
    if (target.kind == NatTarget::Kind::Exact)
        return classPreimage(a, quotient(nat, QuotientKind::threshold(target.n)), target.n);
    const unsigned n = target.n;
    if (n == 0) throw std::invalid_argument("residue class modulo 0");
    const unsigned base = target.m % n;
    const unsigned skip = target.m / n;
    // m + nN = (base + nN) minus base, base + n, ..., base + (skip-1)n
    Dfta out = n == 1 ? universalDfta(a.alphabet()) : classPreimage(a, quotient(nat, QuotientKind::modulo(n)), base);
    for (unsigned j = 0; j < skip; ++j)
        out = combine(out, natPreimage(a, NatTarget::exact(base + n * j)), CombineMode::Difference);
    return out;
}

NatImageVerdict natFiniteImage(const Wta& a) {
    requireNaturals(a);
    if (!hasUsefulState(a)) return {};
    const Wta t = trim(a);
    auto loops = smallLoopAnalysis(t);
    if (!loops.allOne) return {false, loops.witness, std::nullopt};
    auto amb = finitelyAmbiguous(booleanProjection(t));
    if (!amb.finitelyAmbiguous) return {false, std::nullopt, amb.witness};
    return {};
}

}  // namespace wta
