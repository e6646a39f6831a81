#include "wta/crispdet.hpp"

namespace wta {

Weight stepEvaluate(const StepMapping& m, const Term& t) {
    Weight out = m.algebra->zero();
    for (const auto& [w, lang] : m.steps)
        if (lang.accepts(t)) out = m.algebra->add(out, w);
    return out;
}

Weight stepEvaluate(const CrispDetWta& c, const Term& t) { return c.evaluate(t); }

namespace {
CrispDetWta constant(const RankedAlphabet& alphabet, AlgebraPtr alg, const Weight& w) {
    return {universalDfta(alphabet), alg, {w}};
}
}  // namespace

WeightSearch::WeightSearch(Wta counting, AlgebraPtr algebra, Weight b)
    : counting_(std::move(counting)), algebra_(std::move(algebra)) {
    route_.b = std::move(b);
    multiples_.push_back(algebra_->zero());
}

const Dfta& WeightSearch::exact(std::uint64_t j) {
    while (exact_.size() <= j)
        exact_.push_back(natPreimage(counting_, NatTarget::exact(static_cast<unsigned>(exact_.size()))));
    return exact_[j];
}

bool WeightSearch::step() {
    if (done_) return true;
    const Algebra& alg = *algebra_;
    const std::uint64_t i = round_++;
    // (i) counts bounded by i?
    const Dfta& li = exact(i);
    covered_ = covered_ ? combine(*covered_, li, CombineMode::Union) : li;
    if (isUniversal(*covered_)) {
        done_ = true;
        route_.kind = WeightRoute::Kind::Bounded;
        route_.bound = i;
        Weight jb = alg.zero();
        for (std::uint64_t j = 0; j <= i; ++j) {
            steps_.emplace_back(jb, exact_[j]);
            jb = alg.add(jb, route_.b);
        }
        return true;
    }
    // (ii) does i*b repeat an earlier multiple?
    if (i == 0) return false;
    multiples_.push_back(alg.add(multiples_.back(), route_.b));
    std::optional<std::uint64_t> hit;
    for (std::uint64_t j = 0; j < i && !hit; ++j)
        if (multiples_[j] == multiples_[i]) hit = j;
    if (!hit) return false;
    // i*b = 0 means (1+i)*b = b
    const std::uint64_t index = *hit == 0 ? 1 : *hit;
    const std::uint64_t period = i - *hit;
    done_ = true;
    route_.kind = WeightRoute::Kind::Periodic;
    route_.index = index;
    route_.period = period;
    for (std::uint64_t j = 0; j < index; ++j) steps_.emplace_back(multiples_[j], exact(j));
    for (std::uint64_t r = index; r < index + period; ++r)
        steps_.emplace_back(multiples_[r], natPreimage(counting_, NatTarget::residue(static_cast<unsigned>(r),
                                                                                     static_cast<unsigned>(period))));
    return true;
}

CrispDetWta assemble(const RankedAlphabet& alphabet, const StepMapping& m) {
    const Algebra& alg = *m.algebra;
    if (m.steps.empty()) return constant(alphabet, m.algebra, alg.zero());
    std::vector<const Dfta*> parts;
    for (const auto& st : m.steps) parts.push_back(&st.second);
    ProductDfta p = product(parts);
    std::vector<Weight> outputs;
    for (const auto& tuple : p.tuples) {
        Weight w = alg.zero();
        for (std::size_t j = 0; j < tuple.size(); ++j)
            if (parts[j]->accepting[tuple[j]]) w = alg.add(w, m.steps[j].first);
        outputs.push_back(std::move(w));
    }
    return {std::move(p.dfta), m.algebra, std::move(outputs)};
}

CrispResult crispDeterminize(const Wta& a, int fuel) {
    CrispResult out;
    const Algebra& alg = a.algebra();
    out.steps.algebra = a.algebraPtr();
    if (!hasUsefulState(a)) {
        out.wta = constant(a.alphabet(), a.algebraPtr(), alg.zero());
        return out;
    }
    const Wta t = trim(a);
    out.reach = computeHC(t, fuel);
    out.fuelUsed = out.reach.layers;
    if (out.reach.diverged) {
        out.status = CrispResult::Status::Diverged;
        out.reason = "run weights keep growing after " + std::to_string(fuel) + " layers";
        return out;
    }
    for (const auto& b : out.reach.completeWeights) {
        if (alg.isZero(b)) continue;
        WeightSearch search(buildCountingWta(t, out.reach.runWeights, b).wta, a.algebraPtr(), b);
        while (!search.done() && search.rounds() < static_cast<std::uint64_t>(fuel)) search.step();
        out.fuelUsed += search.rounds();
        if (!search.done()) {
            out.status = CrispResult::Status::Diverged;
            out.reason = "neither a count bound nor a repeat of the multiples of " + alg.show(b) + " found";
            return out;
        }
        out.routes.push_back(search.route());
        for (const auto& st : search.steps()) out.steps.steps.push_back(st);
    }
    out.wta = assemble(a.alphabet(), out.steps);
    return out;
}

Dfta preimage(const Wta& a, const Weight& b, int fuel) {
    const Algebra& alg = a.algebra();
    CrispResult c;
    Weight want = b;
    if (alg.carrier()) {
        c = crispDeterminize(a, fuel);
    } else {
        Quotient qt = quotient(a.algebraPtr(), QuotientKind::pastCut(b));
        c = crispDeterminize(mapWeights(a, qt.hom), fuel);
        want = qt.hom(b);
    }
    if (c.status != CrispResult::Status::Ok) throw std::runtime_error("preimage construction did not finish: " + c.reason);
    Dfta d = c.wta->dfta;
    for (int q = 0; q < d.numStates(); ++q) d.accepting[q] = c.wta->outputs[q] == want;
    return d;
}

Dfta support(const Wta& a, int fuel) { return complement(preimage(a, a.algebra().zero(), fuel)); }

}  // namespace wta
