#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wta/crispdet.hpp"
#include "wta/io.hpp"

using namespace wta;
using json = nlohmann::json;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(WTA_TEST_DATA) + "/" + name);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string parseError(const std::string& text) {
    try {
        parseWta(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

void sameValues(const Wta& a, const Wta& b, int h) {
    for (const auto& t : oracle::trees(a.alphabet(), h)) CHECK(evaluate(a, t) == evaluate(b, t));
}

}  // namespace

TEST_CASE("fixture files match the builders") {
    sameValues(parseWta(slurp("arctic1.json")), fixtures::arctic1(), 8);
    sameValues(parseWta(slurp("nat3.json")), fixtures::nat3(), 10);
    sameValues(parseWta(slurp("arctic2.json")), fixtures::arctic2(), 5);
    sameValues(parseWta(slurp("tropical2.json")), fixtures::tropical2(), 5);
    sameValues(parseWta(slurp("twochain.json")), fixtures::twochain(), 8);
}

TEST_CASE("format then parse is the identity on semantics") {
    for (const Wta& a : {fixtures::arctic1(), fixtures::nat3(), fixtures::arctic2(), fixtures::twochain()}) {
        const Wta back = parseWta(formatWta(a));
        CHECK(back.numStates() == a.numStates());
        CHECK(back.algebra().kind() == a.algebra().kind());
        sameValues(a, back, 5);
    }
    const auto q = quotient(algebras::naturals(), QuotientKind::modulo(3));
    const Wta m = mapWeights(fixtures::nat3(), q.hom);
    sameValues(m, parseWta(formatWta(m)), 8);
}

TEST_CASE("parse errors name the offending entry") {
    const json base = json::parse(slurp("arctic1.json"));
    auto with = [&](auto edit) {
        json d = base;
        edit(d);
        return parseError(d.dump());
    };
    CHECK(parseError("{") != "");
    CHECK(with([](json& d) { d["transitions"][1]["symbol"] = "delta"; }).find("transitions[1].symbol") == 0);
    CHECK(with([](json& d) { d["transitions"][0]["state"] = "x"; }).find("transitions[0].state: unknown state \"x\"") == 0);
    CHECK(with([](json& d) { d["transitions"][1]["children"] = json::array(); }).find("transitions[1]") == 0);
    CHECK(with([](json& d) { d["states"].push_back("q"); }).find("states[1]: duplicate") == 0);
    CHECK(with([](json& d) { d["roots"][0]["weight"] = "abc"; }).find("roots[0].weight") == 0);
    CHECK(with([](json& d) { d["algebra"]["kind"] = "quaternions"; }).find("algebra") == 0);
    CHECK(with([](json& d) { d.erase("states"); }).find("missing \"states\"") != std::string::npos);
}

TEST_CASE("parallel transitions are summed") {
    json d = json::parse(slurp("arctic1.json"));
    d["transitions"].push_back({{"children", {"q"}}, {"symbol", "gamma"}, {"state", "q"}, {"weight", 3}});
    const Wta a = parseWta(d.dump());
    CHECK(evaluate(a, fixtures::tower(a, "gamma", "alpha", 2)) == Weight(6));
}

TEST_CASE("crisp and dfta output reparse to the same function") {
    const Wta a2 = fixtures::arctic2();
    const auto r = crispDeterminize(a2);
    REQUIRE(r.wta);
    const std::string text = formatCrisp(*r.wta);
    const json doc = json::parse(text);
    CHECK(doc["crisp"] == true);
    CHECK(doc["outputs"].size() == doc["states"].size());
    sameValues(a2, parseWta(text), 5);

    const Dfta d = determinize(booleanProjection(fixtures::nat3()));
    const Wta asWta = parseWta(formatDfta(d));
    CHECK(asWta.algebra().kind() == "boolean");
    for (int n = 0; n <= 10; ++n) {
        const Term t = fixtures::tower(fixtures::nat3(), "gamma", "e", n);
        CHECK(asWta.algebra().isOne(evaluate(asWta, t)) == d.accepts(t));
    }
}

TEST_CASE("weight arguments") {
    const auto arp = algebras::arctic();
    const Algebra& ar = *arp;
    CHECK(parseWeightArg(ar, "3") == Weight(3));
    CHECK(parseWeightArg(ar, "-inf") == ar.zero());
    CHECK(parseWeightArg(ar, "\"2\"") == Weight(2));
    const auto tcp = algebras::twoChain();
    const Algebra& tc = *tcp;
    CHECK(parseWeightArg(tc, "1'") == fixtures::lit(tc, "\"1'\""));
    CHECK_THROWS_AS(parseWeightArg(ar, "x"), ParseError);
}

TEST_CASE("wsa files") {
    const Wsa w = parseWsa(R"({"algebra": {"kind": "naturals"}, "letters": ["a", "b"], "states": ["s", "t"],
        "initial": [{"state": "s", "weight": 1}], "final": [{"state": "t", "weight": 1}],
        "transitions": [{"from": "s", "letter": "a", "to": "s", "weight": 2},
                        {"from": "s", "letter": "b", "to": "t", "weight": 1}]})");
    CHECK(w.edges.size() == 2);
    const auto enc = fromWsa(w);
    CHECK(evaluate(enc.wta, enc.encode({0, 0, 1})) == Weight(4));
    CHECK(evaluate(enc.wta, enc.encode({1, 0})) == Weight(0));
    CHECK_THROWS_WITH_AS(parseWsa(R"({"algebra": {"kind": "naturals"}, "letters": ["a"], "states": ["s"],
        "transitions": [{"from": "s", "letter": "z", "to": "s", "weight": 1}]})"),
                         doctest::Contains("transitions[0].letter"), ParseError);
}

TEST_CASE("reports") {
    const Wta a1 = fixtures::arctic1();
    const json loop = json::parse(formatReport(decideFiniteImage(a1), a1));
    CHECK(loop["verdict"] == "no");
    CHECK(loop["route"] == "small-loop/past-finite");
    CHECK(loop["witness"]["kind"] == "loop");
    CHECK(loop["witness"]["state"] == "q");
    CHECK(loop["witness"].contains("embedding"));
    CHECK(loop.contains("fuel_used"));

    const Wta n3 = fixtures::nat3();
    const json img = json::parse(formatReport(decideImageAtMostK(n3, 2), n3));
    CHECK(img["witness"]["kind"] == "values");
    CHECK(img["witness"]["values"].size() == 3);
    CHECK(img["witness"]["trees"].size() == 3);

    const Wta a2 = fixtures::arctic2();
    const json crisp = json::parse(formatReport(decideFiniteImage(a2, 256, true), a2));
    CHECK(crisp["verdict"] == "yes");
    CHECK(crisp["witness"]["kind"] == "crisp");

    const json tc = json::parse(formatReport(decideFiniteImage(fixtures::twochain()), fixtures::twochain()));
    CHECK(tc["verdict"] == "unknown");

    CHECK(formatRun(n3, Run{0, {Run{1, {Run{0, {}}}}}}) == "p(q(p))");
}
