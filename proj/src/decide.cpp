#include "wta/decide.hpp"

#include <set>

namespace wta {

const char* toString(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

DecisionReport report(std::string question, Verdict v, std::string route, Evidence w = {}) {
    DecisionReport r;
    r.question = std::move(question);
    r.verdict = v;
    r.route = std::move(route);
    r.witness = std::move(w);
    return r;
}

LoopEvidence loopEvidence(const Wta& t, const LoopWitness& w) {
    LoopEvidence ev{w, std::nullopt};
    try {
        ev.embedding = embedLoop(t, w);
    } catch (const NotApplicable&) {
    }
    return ev;
}

bool unambiguous(const Wta& t) {
    Fta f = booleanProjection(t);
    return isDeterministic(f) || isUnambiguous(f);
}

}  // namespace

DecisionReport decideFiniteImage(const Wta& a, int fuel, bool wantCrisp) {
    const std::string question = "finite-image";
    const Algebra& alg = a.algebra();
    const Flags& flags = alg.flags();
    if (!hasUsefulState(a)) return report(question, Verdict::Yes, "no-useful-state", ValueEvidence{{alg.zero()}, {}});
    if (alg.carrier()) return report(question, Verdict::Yes, "finite-algebra");
    const Wta t = trim(a);
    if (flags.monotonic != Tri::True) {
        auto r = report(question, Verdict::Unknown, "not-monotonic");
        r.subject = t;
        return r;
    }
    auto attachCrisp = [&](DecisionReport& r) {
        r.subject = t;
        if (!wantCrisp) return;
        auto c = crispDeterminize(t, fuel);
        r.fuelUsed += c.fuelUsed;
        if (c.status == CrispResult::Status::Ok) r.witness = std::move(*c.wta);
    };

    auto loops = smallLoopAnalysis(t);
    if (!loops.allOne) {
        Evidence ev = loopEvidence(t, *loops.witness);
        DecisionReport r;
        if (flags.past_finite == Tri::True)
            r = report(question, Verdict::No, "small-loop/past-finite", std::move(ev));
        else if (unambiguous(t))
            r = report(question, Verdict::No, "small-loop/unambiguous", std::move(ev));
        else
            r = report(question, Verdict::Unknown, "small-loop/ambiguous-not-past-finite", std::move(ev));
        r.subject = t;
        return r;
    }

    // every small loop has weight one, so H(A) is finite
    const bool locallyFinite = flags.additively_locally_finite == Tri::True;
    const auto amb = finitelyAmbiguous(booleanProjection(t));
    if (locallyFinite || amb.finitelyAmbiguous) {
        auto r = report(question, Verdict::Yes, locallyFinite ? "additively-locally-finite" : "finitely-ambiguous");
        attachCrisp(r);
        return r;
    }
    const auto reach = computeHC(t, fuel);
    std::uint64_t used = reach.layers;
    if (reach.diverged) {
        auto r = report(question, Verdict::Unknown, "run-weights-diverged");
        r.fuelUsed = used;
        return r;
    }
    bool open = false;
    for (const auto& b : reach.completeWeights) {
        if (alg.isZero(b)) continue;
        const auto order = additiveOrder(alg, b, fuel);
        if (order.kind == AdditiveOrder::Kind::Finite) continue;
        Wta counting = buildCountingWta(t, reach.runWeights, b).wta;
        const auto counts = natFiniteImage(counting);
        if (counts.finite) continue;
        if (order.kind == AdditiveOrder::Kind::Unknown) {
            open = true;
            continue;
        }
        DecisionReport r = counts.loop ? report(question, Verdict::No, "unbounded-count/infinite-order",
                                                loopEvidence(trim(counting), *counts.loop))
                                       : report(question, Verdict::No, "unbounded-count/infinite-order",
                                                *counts.ambiguity);
        r.subject = trim(counting);
        r.fuelUsed = used;
        return r;
    }
    if (open) {
        auto r = report(question, Verdict::Unknown, "additive-order-unknown");
        r.fuelUsed = used;
        return r;
    }
    auto r = report(question, Verdict::Yes, "per-weight-conditions");
    r.fuelUsed = used;
    attachCrisp(r);
    return r;
}

DecisionReport decideImageAtMostK(const Wta& a, int k, int fuel) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const std::string question = "image-at-most-" + std::to_string(k);
    const Algebra& alg = a.algebra();
    const Flags& flags = alg.flags();
    if (!hasUsefulState(a)) return report(question, Verdict::Yes, "no-useful-state", ValueEvidence{{alg.zero()}, {}});
    const bool finite = alg.carrier().has_value();
    if (!finite && (flags.past_finite != Tri::True || flags.monotonic != Tri::True))
        return report(question, Verdict::Unknown, "needs-past-finite-monotonic");
    const Wta t = trim(a);
    if (!finite) {
        auto loops = smallLoopAnalysis(t);
        if (!loops.allOne) {
            auto r = report(question, Verdict::No, "small-loop", loopEvidence(t, *loops.witness));
            r.subject = t;
            return r;
        }
    }
    const auto reach = computeHC(t, fuel);
    std::uint64_t used = reach.layers;
    if (reach.diverged) {
        auto r = report(question, Verdict::Unknown, "run-weights-diverged");
        r.fuelUsed = used;
        return r;
    }
    std::vector<WeightSearch> searches;
    for (const auto& b : reach.completeWeights)
        if (!alg.isZero(b)) searches.emplace_back(buildCountingWta(t, reach.runWeights, b).wta, t.algebraPtr(), b);

    TreeStream stream(t.alphabet());
    ValueEvidence seen;
    std::set<Weight> values;
    auto finish = [&](Verdict v, const std::string& route, Evidence w) {
        auto r = report(question, v, route, std::move(w));
        r.fuelUsed = used;
        r.subject = t;
        return r;
    };
    while (true) {
        if (used >= static_cast<std::uint64_t>(fuel)) return finish(Verdict::Unknown, "fuel-exhausted", seen);
        // Algorithm A: the next tree
        ++used;
        const Term* xi = stream.next();
        if (!xi) return finish(Verdict::Yes, "all-trees-enumerated", seen);
        Weight v = evaluate(t, *xi);
        if (values.insert(v).second) {
            seen.values.push_back(v);
            seen.trees.push_back(*xi);
            if (static_cast<int>(values.size()) > k) return finish(Verdict::No, "enumeration", seen);
        }
        // Algorithm B: one round for every unfinished weight
        bool pending = false;
        for (auto& s : searches)
            if (!s.done()) {
                ++used;
                pending = !s.step() || pending;
            }
        if (pending) continue;
        StepMapping m{t.algebraPtr(), {}};
        for (const auto& s : searches)
            for (const auto& st : s.steps()) m.steps.push_back(st);
        CrispDetWta c = assemble(t.alphabet(), m);
        const bool ok = static_cast<int>(c.image().size()) <= k;
        return finish(ok ? Verdict::Yes : Verdict::No, "crisp-determinized", std::move(c));
    }
}

DecisionReport decideStepProperties(const Wta& a, const StepQuestion& q, int fuel) {
    const Algebra& alg = a.algebra();
    std::string question;
    std::set<Weight> wanted(q.set.begin(), q.set.end());
    int k = 1;
    switch (q.kind) {
        case StepQuestion::Kind::ConstantEq: question = "constant-eq"; break;
        case StepQuestion::Kind::Constant: question = "constant"; break;
        case StepQuestion::Kind::OneStep: question = "one-step", k = 2; break;
        case StepQuestion::Kind::EStep: question = "e-step", k = static_cast<int>(wanted.size()); break;
    }
    if (k == 0) return report(question, Verdict::No, "empty-set");
    DecisionReport r = decideImageAtMostK(a, k, fuel);
    r.question = question;
    if (r.verdict != Verdict::Yes) return r;
    std::set<Weight> image;
    if (const auto* c = std::get_if<CrispDetWta>(&r.witness)) {
        for (const auto& w : c->image()) image.insert(w);
    } else if (const auto* ev = std::get_if<ValueEvidence>(&r.witness)) {
        image.insert(ev->values.begin(), ev->values.end());
    } else {
        r.verdict = Verdict::Unknown;
        return r;
    }
    bool ok = true;
    switch (q.kind) {
        case StepQuestion::Kind::ConstantEq: ok = image == std::set<Weight>{q.b}; break;
        case StepQuestion::Kind::Constant: ok = image.size() == 1; break;
        case StepQuestion::Kind::OneStep: ok = image.size() - image.count(alg.zero()) <= 1; break;
        case StepQuestion::Kind::EStep: ok = image == wanted; break;
    }
    r.verdict = ok ? Verdict::Yes : Verdict::No;
    if (!ok) r.witness = ValueEvidence{{image.begin(), image.end()}, {}};
    return r;
}

DecisionReport costFinite(const Wta& a, int fuel) {
    const std::string question = "cost-finite";
    const Algebra& alg = a.algebra();
    if (!hasUsefulState(a)) return report(question, Verdict::Yes, "no-useful-state", ValueEvidence{});
    if (alg.flags().monotonic != Tri::True) return report(question, Verdict::Unknown, "not-monotonic");
    const Wta t = trim(a);
    auto loops = smallLoopAnalysis(t);
    DecisionReport r;
    if (!loops.allOne) {
        r = report(question, Verdict::No, "small-loop", loopEvidence(t, *loops.witness));
    } else {
        auto reach = computeHC(t, fuel);
        r = report(question, Verdict::Yes, "small-loops-one");
        r.fuelUsed = reach.layers;
        if (!reach.diverged) r.witness = ValueEvidence{{reach.costSet.begin(), reach.costSet.end()}, {}};
    }
    r.subject = t;
    return r;
}

DecisionReport cfgFinite(const Grammar& g, int fuel) {
    const Grammar reduced = reduceGrammar(g);
    if (reduced.rules.empty()) return report("cfg-finite", Verdict::Yes, "empty-language");
    DecisionReport r = decideFiniteImage(fromCfg(reduced), fuel);
    r.question = "cfg-finite";
    r.route = "cfg/" + r.route;
    return r;
}

}  // namespace wta
