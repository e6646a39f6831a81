// wtatool: command-line front end. Every invocation prints one JSON report;
// the exit code mirrors its verdict (0 yes, 1 no, 2 unknown, 3 error).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wta/counting.hpp"
#include "wta/crispdet.hpp"
#include "wta/decide.hpp"
#include "wta/io.hpp"

using json = nlohmann::json;
using namespace wta;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text << "\n";
}

int exitCode(const std::string& verdict) {
    if (verdict == "yes") return 0;
    if (verdict == "no") return 1;
    if (verdict == "unknown") return 2;
    return 3;
}

int emit(json report) {
    if (!report.contains("witness")) report["witness"] = nullptr;
    if (!report.contains("fuel_used")) report["fuel_used"] = 0;
    std::cout << report.dump(2) << "\n";
    return exitCode(report.value("verdict", "error"));
}

json plain(const std::string& question, const std::string& verdict, const std::string& route) {
    return {{"question", question}, {"verdict", verdict}, {"route", route}};
}

json lit(const Algebra& alg, const Weight& w) { return json::parse(alg.encode(w)); }

// LITERAL-LIST: a JSON array, or comma-separated literals
std::vector<Weight> parseSet(const Algebra& alg, const std::string& text) {
    std::vector<Weight> out;
    json j;
    bool isArray = false;
    try {
        j = json::parse(text);
        isArray = j.is_array();
    } catch (const json::parse_error&) {
    }
    if (isArray) {
        for (const auto& e : j) out.push_back(alg.decode(e.dump()));
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto a = item.find_first_not_of(' ');
        const auto b = item.find_last_not_of(' ');
        if (a == std::string::npos) continue;
        out.push_back(parseWeightArg(alg, item.substr(a, b - a + 1)));
    }
    return out;
}

struct Options {
    std::string file;
    std::string out;
    std::string tree;
    std::string weight;
    std::string set;
    std::string word;
    int fuel = 256;
    int k = 1;
};

// automaton outputs go to --out, or into the report when no file is given
void attach(json& report, const Options& o, const std::string& text) {
    if (o.out.empty())
        report["wta"] = json::parse(text);
    else {
        spit(o.out, text);
        report["out"] = o.out;
    }
}

json runDecision(const DecisionReport& r, const Wta& a) { return json::parse(formatReport(r, a)); }

json cmdEval(const Options& o) {
    const Wta a = parseWta(slurp(o.file));
    const Term t = parseTerm(a.alphabet(), o.tree);
    if (holeCount(t) != 0) throw ParseError("--tree: expected a tree, got a context");
    json r = plain("eval", "yes", "evaluate");
    const Weight v = evaluate(a, t);
    r["value"] = a.algebra().show(v);
    r["literal"] = lit(a.algebra(), v);
    return r;
}

json cmdTrim(const Options& o) {
    const Wta a = parseWta(slurp(o.file));
    if (!hasUsefulState(a)) return plain("trim", "yes", "no-useful-state");
    json r = plain("trim", "yes", "trim");
    attach(r, o, formatWta(trim(a)));
    return r;
}

json cmdPreimage(const Options& o, bool support) {
    const Wta a = parseWta(slurp(o.file));
    const std::string question = support ? "support" : "preimage";
    Dfta d;
    try {
        d = support ? wta::support(a, o.fuel) : preimage(a, parseWeightArg(a.algebra(), o.weight), o.fuel);
    } catch (const NotApplicable& e) {
        json r = plain(question, "unknown", "not-applicable");
        r["reason"] = e.what();
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const std::runtime_error& e) {
        json r = plain(question, "unknown", "fuel-exhausted");
        r["reason"] = e.what();
        return r;
    }
    json r = plain(question, "yes", "crisp-determinized");
    if (!o.tree.empty()) r["member"] = member(d, parseTerm(a.alphabet(), o.tree));
    attach(r, o, formatDfta(d));
    return r;
}

json cmdCrisp(const Options& o) {
    const Wta a = parseWta(slurp(o.file));
    CrispResult c;
    try {
        c = crispDeterminize(a, o.fuel);
    } catch (const NotApplicable& e) {
        json r = plain("crisp", "unknown", "not-applicable");
        r["reason"] = e.what();
        return r;
    }
    json r = plain("crisp", c.status == CrispResult::Status::Ok ? "yes" : "unknown",
                   c.status == CrispResult::Status::Ok ? "crisp-determinized" : "fuel-exhausted");
    r["fuel_used"] = c.fuelUsed;
    if (c.status != CrispResult::Status::Ok) {
        r["reason"] = c.reason;
        return r;
    }
    json image = json::array();
    for (const auto& w : c.wta->image()) image.push_back(lit(a.algebra(), w));
    r["image"] = image;
    attach(r, o, formatCrisp(*c.wta));
    return r;
}

json cmdDecide(const std::string& which, const Options& o) {
    const Wta a = parseWta(slurp(o.file));
    try {
        if (which == "finite-image") return runDecision(decideFiniteImage(a, o.fuel), a);
        if (which == "image-at-most") return runDecision(decideImageAtMostK(a, o.k, o.fuel), a);
        if (which == "cost-finite") return runDecision(costFinite(a, o.fuel), a);
        if (which == "constant") {
            auto q = o.weight.empty() ? StepQuestion::constant()
                                      : StepQuestion::constantEq(parseWeightArg(a.algebra(), o.weight));
            return runDecision(decideStepProperties(a, q, o.fuel), a);
        }
        if (which == "one-step") return runDecision(decideStepProperties(a, StepQuestion::oneStep(), o.fuel), a);
        if (which == "e-step")
            return runDecision(
                decideStepProperties(a, StepQuestion::eStep(parseSet(a.algebra(), o.set)), o.fuel), a);
    } catch (const NotApplicable& e) {
        json r = plain(which, "unknown", "not-applicable");
        r["reason"] = e.what();
        return r;
    }
    throw std::invalid_argument("unknown decision " + which);
}

json cmdCfg(const Options& o) {
    const Grammar g = parseGrammar(slurp(o.file));
    const Grammar reduced = reduceGrammar(g);
    const DecisionReport r = cfgFinite(g, o.fuel);
    if (reduced.rules.empty()) return plain(r.question, toString(r.verdict), r.route);
    return runDecision(r, fromCfg(reduced));
}

json cmdWsa(const Options& o) {
    const Wsa w = parseWsa(slurp(o.file));
    const WsaEncoding enc = fromWsa(w);
    std::vector<int> word;
    std::stringstream ss(o.word);
    std::string letter;
    while (ss >> letter) {
        auto it = std::find(w.letters.begin(), w.letters.end(), letter);
        if (it == w.letters.end()) throw ParseError("--word: unknown letter \"" + letter + "\"");
        word.push_back(static_cast<int>(it - w.letters.begin()));
    }
    const Term t = enc.encode(word);
    const Weight v = evaluate(enc.wta, t);
    json r = plain("wsa-eval", "yes", "evaluate");
    r["tree"] = formatTerm(enc.wta.alphabet(), t);
    r["value"] = w.algebra->show(v);
    r["literal"] = lit(*w.algebra, v);
    return r;
}

json cmdCheckAlgebra(const Options& o) {
    const json doc = json::parse(slurp(o.file));
    if (!doc.contains("algebra")) throw ParseError("file: missing \"algebra\"");
    AlgebraPtr alg = makeAlgebra(doc["algebra"].dump());
    std::vector<Weight> samples = alg->samples();
    if (doc.contains("samples"))
        for (const auto& s : doc["samples"]) samples.push_back(alg->decode(s.dump()));
    if (!o.set.empty())
        for (auto& w : parseSet(*alg, o.set)) samples.push_back(std::move(w));
    const auto violations = checkAxioms(*alg, samples);
    json r = plain("check-algebra", violations.empty() ? "yes" : "no", "axioms");
    const Flags& f = alg->flags();
    r["flags"] = {{"commutative", toString(f.commutative)},
                  {"left_distributive", toString(f.left_distributive)},
                  {"right_distributive", toString(f.right_distributive)},
                  {"idempotent", toString(f.idempotent)},
                  {"monotonic", toString(f.monotonic)},
                  {"past_finite", toString(f.past_finite)},
                  {"additively_locally_finite", toString(f.additively_locally_finite)}};
    json vs = json::array();
    for (const auto& v : violations) {
        json ws = json::array();
        for (const auto& w : v.witness) ws.push_back(lit(*alg, w));
        vs.push_back({{"law", v.law}, {"witness", ws}});
    }
    if (!violations.empty()) r["witness"] = {{"kind", "violations"}, {"violations", vs}};
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted tree automata toolkit"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("file", o.file, what)->required();
        sub->add_option("--fuel", o.fuel, "work budget")->check(CLI::NonNegativeNumber);
        sub->add_option("--out", o.out, "write the automaton here");
    };

    auto* eval = app.add_subcommand("eval", "value of a tree");
    common(eval, "wta file");
    eval->add_option("--tree", o.tree, "tree, e.g. gamma(alpha)")->required();
    auto* trimCmd = app.add_subcommand("trim", "restrict to useful states");
    common(trimCmd, "wta file");
    auto* supportCmd = app.add_subcommand("support", "trees with nonzero value");
    common(supportCmd, "wta file");
    supportCmd->add_option("--tree", o.tree, "also report membership of this tree");
    auto* pre = app.add_subcommand("preimage", "trees with the given value");
    common(pre, "wta file");
    pre->add_option("--weight", o.weight, "weight literal")->required();
    pre->add_option("--tree", o.tree, "also report membership of this tree");
    auto* crisp = app.add_subcommand("crisp", "crisp-deterministic equivalent");
    common(crisp, "wta file");

    auto* decide = app.add_subcommand("decide", "decision procedures");
    decide->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> decisions;
    for (const char* name : {"finite-image", "image-at-most", "cost-finite", "constant", "one-step", "e-step"}) {
        auto* d = decide->add_subcommand(name);
        common(d, "wta file");
        decisions.emplace_back(name, d);
    }
    decisions[1].second->add_option("--k", o.k, "image bound")->required()->check(CLI::PositiveNumber);
    decisions[3].second->add_option("--weight", o.weight, "the constant, if fixed");
    decisions[5].second->add_option("--set", o.set, "literal list")->required();

    auto* cfg = app.add_subcommand("cfg-finite", "is the language of a grammar finite");
    common(cfg, "grammar file");
    auto* wsa = app.add_subcommand("wsa-eval", "value of a word under a string automaton");
    common(wsa, "wsa file");
    wsa->add_option("--word", o.word, "space-separated letters");
    auto* check = app.add_subcommand("check-algebra", "test the axioms on samples");
    common(check, "file with \"algebra\" and optional \"samples\"");
    check->add_option("--set", o.set, "extra samples");

    std::string question = "usage";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json r = plain(question, "error", "usage");
        r["error"] = e.what();
        return emit(r);
    }

    try {
        if (eval->parsed()) return emit(cmdEval(o));
        if (trimCmd->parsed()) return emit(cmdTrim(o));
        if (supportCmd->parsed()) return emit(cmdPreimage(o, true));
        if (pre->parsed()) return emit(cmdPreimage(o, false));
        if (crisp->parsed()) return emit(cmdCrisp(o));
        for (const auto& [name, d] : decisions)
            if (d->parsed()) {
                question = name;
                return emit(cmdDecide(name, o));
            }
        if (cfg->parsed()) return emit(cmdCfg(o));
        if (wsa->parsed()) return emit(cmdWsa(o));
        if (check->parsed()) return emit(cmdCheckAlgebra(o));
    } catch (const std::exception& e) {
        for (auto* sub : app.get_subcommands()) question = sub->get_name();
        json r = plain(question, "error", "error");
        r["error"] = e.what();
        return emit(r);
    }
    return emit(plain(question, "error", "usage"));
}
