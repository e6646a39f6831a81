#include "wta/io.hpp"

#include <algorithm>

#include <json.hpp>

namespace wta {

using json = nlohmann::json;

namespace {

json parseDoc(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    return obj[key];
}

std::string str(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

Weight literal(const Algebra& alg, const json& j, const std::string& where) {
    try {
        return alg.decode(j.dump());
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json lit(const Algebra& alg, const Weight& w) { return json::parse(alg.encode(w)); }

AlgebraPtr algebraOf(const json& doc) {
    const json& d = field(doc, "algebra", "file");
    try {
        return makeAlgebra(d.dump());
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("algebra: ") + e.what());
    }
}

StateId stateIn(const std::vector<std::string>& names, const json& j, const std::string& where) {
    const auto n = str(j, where);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return static_cast<StateId>(i);
    throw ParseError(where + ": unknown state \"" + n + "\"");
}

json dftaDoc(const Dfta& d, const Algebra& alg, const std::vector<Weight>& outputs) {
    json doc;
    doc["algebra"] = json::parse(alg.descriptor());
    doc["alphabet"] = json::array();
    for (const auto& s : d.alphabet().symbols()) doc["alphabet"].push_back({{"symbol", s.name}, {"rank", s.rank}});
    auto name = [](StateId q) { return "s" + std::to_string(q); };
    doc["states"] = json::array();
    for (StateId q = 0; q < d.numStates(); ++q) doc["states"].push_back(name(q));
    doc["transitions"] = json::array();
    for (SymbolId s = 0; s < d.alphabet().size(); ++s)
        for (const auto& [kids, target] : d.table(s)) {
            json ch = json::array();
            for (StateId q : kids) ch.push_back(name(q));
            doc["transitions"].push_back({{"children", ch},
                                          {"symbol", d.alphabet()[s].name},
                                          {"state", name(target)},
                                          {"weight", lit(alg, alg.one())}});
        }
    doc["roots"] = json::array();
    doc["outputs"] = json::object();
    for (StateId q = 0; q < d.numStates(); ++q) {
        if (!alg.isZero(outputs[q])) doc["roots"].push_back({{"state", name(q)}, {"weight", lit(alg, outputs[q])}});
        doc["outputs"][name(q)] = lit(alg, outputs[q]);
    }
    doc["crisp"] = true;
    return doc;
}

std::string termText(const Wta& a, const Term& t) { return formatTerm(a.alphabet(), t); }

}  // namespace

Wta parseWta(std::string_view text) {
    const json doc = parseDoc(text, "wta file");
    AlgebraPtr alg = algebraOf(doc);
    std::vector<Symbol> symbols;
    const json& alpha = field(doc, "alphabet", "file");
    if (!alpha.is_array()) throw ParseError("alphabet: expected an array");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const std::string where = "alphabet[" + std::to_string(i) + "]";
        const json& r = field(alpha[i], "rank", where);
        if (!r.is_number_unsigned()) throw ParseError(where + ".rank: expected a nonnegative integer");
        symbols.push_back({str(field(alpha[i], "symbol", where), where + ".symbol"), r.get<int>()});
    }
    RankedAlphabet alphabet = [&] {
        try {
            return RankedAlphabet(symbols);
        } catch (const std::exception& e) {
            throw ParseError(std::string("alphabet: ") + e.what());
        }
    }();
    std::vector<std::string> states;
    const json& st = field(doc, "states", "file");
    if (!st.is_array()) throw ParseError("states: expected an array");
    for (std::size_t i = 0; i < st.size(); ++i) {
        auto n = str(st[i], "states[" + std::to_string(i) + "]");
        if (std::find(states.begin(), states.end(), n) != states.end())
            throw ParseError("states[" + std::to_string(i) + "]: duplicate state \"" + n + "\"");
        states.push_back(n);
    }
    Wta a(alphabet, alg, states);
    const json trans = doc.value("transitions", json::array());
    for (std::size_t i = 0; i < trans.size(); ++i) {
        const std::string where = "transitions[" + std::to_string(i) + "]";
        const json& t = trans[i];
        const auto symName = str(field(t, "symbol", where), where + ".symbol");
        auto sym = alphabet.find(symName);
        if (!sym) throw ParseError(where + ".symbol: unknown symbol \"" + symName + "\"");
        std::vector<StateId> kids;
        const json ch = t.value("children", json::array());
        for (std::size_t j = 0; j < ch.size(); ++j)
            kids.push_back(stateIn(states, ch[j], where + ".children[" + std::to_string(j) + "]"));
        if (static_cast<int>(kids.size()) != alphabet.rank(*sym))
            throw ParseError(where + ": symbol \"" + symName + "\" has rank " + std::to_string(alphabet.rank(*sym)) +
                             " but " + std::to_string(kids.size()) + " children are given");
        const StateId target = stateIn(states, field(t, "state", where), where + ".state");
        const Weight w = literal(*alg, field(t, "weight", where), where + ".weight");
        const Weight old = a.transition(kids, *sym, target);
        a.setTransition(kids, *sym, target, alg->isZero(old) ? w : alg->add(old, w));
    }
    const json roots = doc.value("roots", json::array());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const std::string where = "roots[" + std::to_string(i) + "]";
        const StateId q = stateIn(states, field(roots[i], "state", where), where + ".state");
        a.setRoot(q, literal(*alg, field(roots[i], "weight", where), where + ".weight"));
    }
    return a;
}

std::string formatWta(const Wta& a) {
    const Algebra& alg = a.algebra();
    json doc;
    doc["algebra"] = json::parse(alg.descriptor());
    doc["alphabet"] = json::array();
    for (const auto& s : a.alphabet().symbols()) doc["alphabet"].push_back({{"symbol", s.name}, {"rank", s.rank}});
    doc["states"] = a.stateNames();
    doc["transitions"] = json::array();
    for (const auto& t : a.transitions()) {
        json ch = json::array();
        for (StateId q : t.children) ch.push_back(a.stateName(q));
        doc["transitions"].push_back({{"children", ch},
                                      {"symbol", a.alphabet()[t.symbol].name},
                                      {"state", a.stateName(t.target)},
                                      {"weight", lit(alg, t.weight)}});
    }
    doc["roots"] = json::array();
    for (StateId q = 0; q < a.numStates(); ++q)
        if (!alg.isZero(a.root(q)))
            doc["roots"].push_back({{"state", a.stateName(q)}, {"weight", lit(alg, a.root(q))}});
    return doc.dump(2);
}

std::string formatCrisp(const CrispDetWta& c) { return dftaDoc(c.dfta, *c.algebra, c.outputs).dump(2); }

std::string formatDfta(const Dfta& d) {
    auto b = algebras::boolean();
    std::vector<Weight> outputs;
    for (int q = 0; q < d.numStates(); ++q) outputs.push_back(d.accepting[q] ? b->one() : b->zero());
    return dftaDoc(d, *b, outputs).dump(2);
}

Wsa parseWsa(std::string_view text) {
    const json doc = parseDoc(text, "wsa file");
    Wsa w;
    w.algebra = algebraOf(doc);
    const Algebra& alg = *w.algebra;
    for (const auto& l : field(doc, "letters", "file")) w.letters.push_back(str(l, "letters"));
    for (const auto& s : field(doc, "states", "file")) w.states.push_back(str(s, "states"));
    w.initial.assign(w.states.size(), alg.zero());
    w.final.assign(w.states.size(), alg.zero());
    for (const char* key : {"initial", "final"}) {
        const json list = doc.value(key, json::array());
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
            const StateId q = stateIn(w.states, field(list[i], "state", where), where + ".state");
            (std::string(key) == "initial" ? w.initial : w.final)[q] =
                literal(alg, field(list[i], "weight", where), where + ".weight");
        }
    }
    const json trans = doc.value("transitions", json::array());
    for (std::size_t i = 0; i < trans.size(); ++i) {
        const std::string where = "transitions[" + std::to_string(i) + "]";
        Wsa::Edge e;
        e.from = stateIn(w.states, field(trans[i], "from", where), where + ".from");
        e.to = stateIn(w.states, field(trans[i], "to", where), where + ".to");
        const auto letter = str(field(trans[i], "letter", where), where + ".letter");
        auto it = std::find(w.letters.begin(), w.letters.end(), letter);
        if (it == w.letters.end()) throw ParseError(where + ".letter: unknown letter \"" + letter + "\"");
        e.letter = static_cast<int>(it - w.letters.begin());
        e.weight = literal(alg, field(trans[i], "weight", where), where + ".weight");
        w.edges.push_back(std::move(e));
    }
    return w;
}

Weight parseWeightArg(const Algebra& alg, std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        j = std::string(text);
    }
    return literal(alg, j, "weight");
}

std::string formatRun(const Wta& a, const Run& r) {
    std::string out = a.stateName(r.state);
    if (r.children.empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < r.children.size(); ++i) {
        if (i > 0) out += ",";
        out += formatRun(a, r.children[i]);
    }
    return out + ")";
}

std::string formatReport(const DecisionReport& r, const Wta& input) {
    const Wta& a = r.subject ? *r.subject : input;
    const Algebra& alg = a.algebra();
    json doc;
    doc["question"] = r.question;
    doc["verdict"] = toString(r.verdict);
    doc["route"] = r.route;
    doc["fuel_used"] = r.fuelUsed;
    json w = nullptr;
    if (const auto* loop = std::get_if<LoopEvidence>(&r.witness)) {
        w = {{"kind", "loop"},
             {"state", a.stateName(loop->loop.state)},
             {"context", termText(a, loop->loop.context)},
             {"run", formatRun(a, loop->loop.run)},
             {"weight", lit(alg, loop->loop.weight)}};
        if (loop->embedding) {
            const auto& d = *loop->embedding;
            w["embedding"] = {{"outer", termText(a, d.outer)},
                              {"outer_run", formatRun(a, d.outerRun)},
                              {"inner", termText(a, d.inner)},
                              {"inner_run", formatRun(a, d.innerRun)}};
        }
    } else if (const auto* ev = std::get_if<ValueEvidence>(&r.witness)) {
        w = {{"kind", "values"}, {"values", json::array()}};
        for (const auto& v : ev->values) w["values"].push_back(lit(alg, v));
        if (!ev->trees.empty()) {
            w["trees"] = json::array();
            for (const auto& t : ev->trees) w["trees"].push_back(termText(a, t));
        }
    } else if (const auto* c = std::get_if<CrispDetWta>(&r.witness)) {
        w = {{"kind", "crisp"}, {"wta", dftaDoc(c->dfta, *c->algebra, c->outputs)}, {"image", json::array()}};
        for (const auto& v : c->image()) w["image"].push_back(lit(*c->algebra, v));
    } else if (const auto* p = std::get_if<AmbiguityPattern>(&r.witness)) {
        w = {{"kind", "ambiguity"},
             {"pattern", p->kind == AmbiguityPattern::Kind::TwoLoops ? "two-loops" : "branching"},
             {"p", a.stateName(p->p)},
             {"q", a.stateName(p->q)},
             {"context", termText(a, p->context)}};
        w["runs"] = json::array();
        for (const auto& run : p->runs) w["runs"].push_back(formatRun(a, run));
    }
    doc["witness"] = w;
    return doc.dump(2);
}

}  // namespace wta
