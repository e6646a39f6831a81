#include "wta/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

using json = nlohmann::json;

namespace wta {

const char* toString(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "unknown";
    }
}

bool Algebra::leq(const Weight&, const Weight&) const {
    throw NotApplicable(kind() + " has no order");
}

std::string Algebra::show(const Weight& w) const {
    auto text = encode(w);
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') return text.substr(1, text.size() - 2);
    return text;
}

Weight sum(const Algebra& alg, const std::vector<Weight>& ws) {
    Weight acc = alg.zero();
    for (const auto& w : ws) acc = alg.add(acc, w);
    return acc;
}

Weight product(const Algebra& alg, const std::vector<Weight>& ws) {
    Weight acc = alg.one();
    for (const auto& w : ws) acc = alg.mul(acc, w);
    return acc;
}

Weight multiple(const Algebra& alg, const BigInt& n, const Weight& b) {
    Weight acc = alg.zero();
    Weight pow = b;
    BigInt k = n;
    while (k > 0) {
        if ((k & 1) != 0) acc = alg.add(acc, pow);
        k >>= 1;
        if (k > 0) pow = alg.add(pow, pow);
    }
    return acc;
}

bool less(const Algebra& alg, const Weight& a, const Weight& b) {
    return a != b && alg.leq(a, b);
}

Homomorphism identity(AlgebraPtr alg) {
    return Homomorphism{alg, alg, [](const Weight& w) { return w; }};
}

namespace {

json parseJson(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad JSON literal: ") + e.what());
    }
}

BigInt parseNat(const json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) {
        auto v = j.get<std::int64_t>();
        if (v < 0) throw ParseError("negative number " + std::to_string(v));
        return BigInt(v);
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("not a natural number: \"" + s + "\"");
        return BigInt(s);
    }
    throw ParseError("expected a natural number, got " + j.dump());
}

json natJson(const BigInt& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) return json(n.convert_to<std::uint64_t>());
    return json(n.str());
}

std::string quoted(const std::string& s) { return json(s).dump(); }

bool isWord(const json& j, const char* word) { return j.is_string() && j.get_ref<const std::string&>() == word; }

std::vector<Weight> range(const BigInt& from, const BigInt& to) {
    if (to - from > 100000) throw std::length_error("past set too large to enumerate");
    std::vector<Weight> out;
    for (BigInt i = from; i <= to; ++i) out.emplace_back(i);
    return out;
}

class Basic : public Algebra {
public:
    const Flags& flags() const override { return flags_; }

protected:
    Flags flags_;
};

Flags allTrue() {
    return {Tri::True, Tri::True, Tri::True, Tri::True, Tri::True, Tri::True, Tri::True};
}

// ---------------------------------------------------------------- boolean

class BooleanAlgebra final : public Basic {
public:
    BooleanAlgebra() { flags_ = allTrue(); }
    std::string kind() const override { return "boolean"; }
    std::string descriptor() const override { return R"({"kind":"boolean","params":{}})"; }
    Weight zero() const override { return Weight(0); }
    Weight one() const override { return Weight(1); }
    Weight add(const Weight& a, const Weight& b) const override { return std::max(a.as<BigInt>(), b.as<BigInt>()); }
    Weight mul(const Weight& a, const Weight& b) const override { return std::min(a.as<BigInt>(), b.as<BigInt>()); }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override { return a.as<BigInt>() <= b.as<BigInt>(); }
    std::optional<std::vector<Weight>> past(const Weight& b) const override { return range(0, b.as<BigInt>()); }
    std::optional<std::vector<Weight>> carrier() const override { return std::vector<Weight>{0, 1}; }
    AdditiveOrder additiveOrderHint(const Weight&) const override { return AdditiveOrder::finite(1, 1); }
    std::vector<Weight> samples() const override { return {0, 1}; }
    std::string encode(const Weight& w) const override { return quoted(w.as<BigInt>().str()); }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (j.is_boolean()) return Weight(j.get<bool>() ? 1 : 0);
        BigInt n = parseNat(j);
        if (n > 1) throw ParseError("boolean literal must be 0 or 1");
        return n;
    }
};

// ---------------------------------------------------------------- naturals

class NaturalsAlgebra final : public Basic {
public:
    NaturalsAlgebra() {
        flags_ = allTrue();
        flags_.idempotent = Tri::False;
        flags_.additively_locally_finite = Tri::False;
    }
    std::string kind() const override { return "naturals"; }
    std::string descriptor() const override { return R"({"kind":"naturals","params":{}})"; }
    Weight zero() const override { return Weight(0); }
    Weight one() const override { return Weight(1); }
    Weight add(const Weight& a, const Weight& b) const override { return BigInt(a.as<BigInt>() + b.as<BigInt>()); }
    Weight mul(const Weight& a, const Weight& b) const override { return BigInt(a.as<BigInt>() * b.as<BigInt>()); }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override { return a.as<BigInt>() <= b.as<BigInt>(); }
    std::optional<std::vector<Weight>> past(const Weight& b) const override { return range(0, b.as<BigInt>()); }
    AdditiveOrder additiveOrderHint(const Weight& b) const override {
        return b.as<BigInt>() == 0 ? AdditiveOrder::finite(1, 1) : AdditiveOrder::infinite();
    }
    std::vector<Weight> samples() const override { return {0, 1, 2, 3, 5}; }
    std::string encode(const Weight& w) const override { return quoted(w.as<BigInt>().str()); }
    Weight decode(std::string_view text) const override { return parseNat(parseJson(text)); }
};

// ---------------------------------------------------------------- arctic / tropical

// (N u {-inf}, max, +, -inf, 0)
class ArcticAlgebra final : public Basic {
public:
    ArcticAlgebra() { flags_ = allTrue(); }
    std::string kind() const override { return "arctic"; }
    std::string descriptor() const override { return R"({"kind":"arctic","params":{}})"; }
    Weight zero() const override { return Mark::NegInf; }
    Weight one() const override { return Weight(0); }
    Weight add(const Weight& a, const Weight& b) const override {
        if (a.is<Mark>()) return b;
        if (b.is<Mark>()) return a;
        return std::max(a.as<BigInt>(), b.as<BigInt>());
    }
    Weight mul(const Weight& a, const Weight& b) const override {
        if (a.is<Mark>() || b.is<Mark>()) return Mark::NegInf;
        return BigInt(a.as<BigInt>() + b.as<BigInt>());
    }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override {
        if (a.is<Mark>()) return true;
        if (b.is<Mark>()) return false;
        return a.as<BigInt>() <= b.as<BigInt>();
    }
    std::optional<std::vector<Weight>> past(const Weight& b) const override {
        std::vector<Weight> out{Mark::NegInf};
        if (!b.is<Mark>()) {
            auto rest = range(0, b.as<BigInt>());
            out.insert(out.end(), rest.begin(), rest.end());
        }
        return out;
    }
    AdditiveOrder additiveOrderHint(const Weight&) const override { return AdditiveOrder::finite(1, 1); }
    std::vector<Weight> samples() const override { return {Mark::NegInf, 0, 1, 2, 3}; }
    std::string encode(const Weight& w) const override {
        return w.is<Mark>() ? quoted("-inf") : quoted(w.as<BigInt>().str());
    }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (isWord(j, "-inf")) return Mark::NegInf;
        return parseNat(j);
    }
};

// (N u {inf}, min, +, inf, 0); ordered by the usual <= only so that the
// failure of monotonicity can be demonstrated
class TropicalAlgebra final : public Basic {
public:
    TropicalAlgebra() {
        flags_ = allTrue();
        flags_.monotonic = Tri::False;
        flags_.past_finite = Tri::False;
    }
    std::string kind() const override { return "tropical"; }
    std::string descriptor() const override { return R"({"kind":"tropical","params":{}})"; }
    Weight zero() const override { return Mark::PosInf; }
    Weight one() const override { return Weight(0); }
    Weight add(const Weight& a, const Weight& b) const override {
        if (a.is<Mark>()) return b;
        if (b.is<Mark>()) return a;
        return std::min(a.as<BigInt>(), b.as<BigInt>());
    }
    Weight mul(const Weight& a, const Weight& b) const override {
        if (a.is<Mark>() || b.is<Mark>()) return Mark::PosInf;
        return BigInt(a.as<BigInt>() + b.as<BigInt>());
    }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override {
        if (b.is<Mark>()) return true;
        if (a.is<Mark>()) return false;
        return a.as<BigInt>() <= b.as<BigInt>();
    }
    AdditiveOrder additiveOrderHint(const Weight&) const override { return AdditiveOrder::finite(1, 1); }
    std::vector<Weight> samples() const override { return {Mark::PosInf, 0, 1, 2, 3}; }
    std::string encode(const Weight& w) const override {
        return w.is<Mark>() ? quoted("inf") : quoted(w.as<BigInt>().str());
    }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (isWord(j, "inf")) return Mark::PosInf;
        return parseNat(j);
    }
};

// ---------------------------------------------------------------- lcm

class LcmAlgebra final : public Basic {
public:
    LcmAlgebra() { flags_ = allTrue(); }
    std::string kind() const override { return "lcm"; }
    std::string descriptor() const override { return R"({"kind":"lcm","params":{}})"; }
    Weight zero() const override { return Weight(0); }
    Weight one() const override { return Weight(1); }
    Weight add(const Weight& a, const Weight& b) const override {
        const auto& x = a.as<BigInt>();
        const auto& y = b.as<BigInt>();
        if (x == 0) return y;
        if (y == 0) return x;
        return BigInt(boost::multiprecision::lcm(x, y));
    }
    Weight mul(const Weight& a, const Weight& b) const override { return BigInt(a.as<BigInt>() * b.as<BigInt>()); }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override { return a.as<BigInt>() <= b.as<BigInt>(); }
    std::optional<std::vector<Weight>> past(const Weight& b) const override { return range(0, b.as<BigInt>()); }
    AdditiveOrder additiveOrderHint(const Weight&) const override { return AdditiveOrder::finite(1, 1); }
    std::vector<Weight> samples() const override { return {0, 1, 2, 3, 4, 6}; }
    std::string encode(const Weight& w) const override { return quoted(w.as<BigInt>().str()); }
    Weight decode(std::string_view text) const override { return parseNat(parseJson(text)); }
};

// ---------------------------------------------------------------- fset

IntSet normalize(std::vector<BigInt> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return IntSet{std::move(v)};
}

// injective f: a -> b with n <= f(n); matching largest to largest is optimal
bool fsetLeq(const IntSet& a, const IntSet& b) {
    if (a.items.size() > b.items.size()) return false;
    auto ia = a.items.rbegin();
    auto ib = b.items.rbegin();
    for (; ia != a.items.rend(); ++ia, ++ib)
        if (*ia > *ib) return false;
    return true;
}

class FSetAlgebra final : public Basic {
public:
    FSetAlgebra() { flags_ = allTrue(); }
    std::string kind() const override { return "fset"; }
    std::string descriptor() const override { return R"({"kind":"fset","params":{}})"; }
    Weight zero() const override { return IntSet{}; }
    Weight one() const override { return IntSet{{BigInt(0)}}; }
    Weight add(const Weight& a, const Weight& b) const override {
        auto v = a.as<IntSet>().items;
        const auto& w = b.as<IntSet>().items;
        v.insert(v.end(), w.begin(), w.end());
        return normalize(std::move(v));
    }
    Weight mul(const Weight& a, const Weight& b) const override {
        std::vector<BigInt> v;
        for (const auto& x : a.as<IntSet>().items)
            for (const auto& y : b.as<IntSet>().items) v.push_back(x + y);
        return normalize(std::move(v));
    }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override { return fsetLeq(a.as<IntSet>(), b.as<IntSet>()); }
    std::optional<std::vector<Weight>> past(const Weight& b) const override {
        const auto& items = b.as<IntSet>().items;
        std::vector<Weight> out{IntSet{}};
        if (items.empty()) return out;
        if (items.back() >= 20) throw std::length_error("fset past set too large to enumerate");
        unsigned width = items.back().convert_to<unsigned>() + 1;
        for (std::uint32_t mask = 1; mask < (1u << width); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) > items.size()) continue;
            IntSet s;
            for (unsigned i = 0; i < width; ++i)
                if ((mask >> i) & 1u) s.items.emplace_back(i);
            if (fsetLeq(s, b.as<IntSet>())) out.emplace_back(std::move(s));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    AdditiveOrder additiveOrderHint(const Weight&) const override { return AdditiveOrder::finite(1, 1); }
    std::vector<Weight> samples() const override {
        auto set = [](std::initializer_list<int> xs) {
            std::vector<BigInt> v(xs.begin(), xs.end());
            return Weight(normalize(v));
        };
        return {IntSet{}, set({0}), set({1}), set({0, 2}), set({1, 3})};
    }
    std::string encode(const Weight& w) const override {
        json j = json::array();
        for (const auto& x : w.as<IntSet>().items) j.push_back(natJson(x));
        return j.dump();
    }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (!j.is_array()) throw ParseError("fset literal must be an array of naturals");
        std::vector<BigInt> v;
        for (const auto& x : j) v.push_back(parseNat(x));
        return normalize(std::move(v));
    }
};

// ---------------------------------------------------------------- mat_n

// Positive n x n matrices together with the scalar matrices kI. The scalar
// matrices are needed for closure: 1 + 1 = 2I is not positive for n >= 2.
class MatrixAlgebra final : public Basic {
public:
    explicit MatrixAlgebra(int n) : n_(n) {
        flags_ = allTrue();
        flags_.commutative = n == 1 ? Tri::True : Tri::False;
        flags_.idempotent = Tri::False;
        flags_.additively_locally_finite = Tri::False;
    }
    std::string kind() const override { return "mat_n"; }
    std::string descriptor() const override {
        return R"({"kind":"mat_n","params":{"n":)" + std::to_string(n_) + "}}";
    }
    Weight zero() const override { return scalar(0); }
    Weight one() const override { return scalar(1); }
    Weight add(const Weight& a, const Weight& b) const override {
        Matrix m = a.as<Matrix>();
        const auto& e = b.as<Matrix>().entries;
        for (std::size_t i = 0; i < e.size(); ++i) m.entries[i] += e[i];
        return m;
    }
    Weight mul(const Weight& a, const Weight& b) const override {
        const auto& x = a.as<Matrix>().entries;
        const auto& y = b.as<Matrix>().entries;
        Matrix m{std::vector<BigInt>(x.size())};
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const auto& xik = x[i * n_ + k];
                if (xik == 0) continue;
                for (int j = 0; j < n_; ++j) m.entries[i * n_ + j] += xik * y[k * n_ + j];
            }
        return m;
    }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override {
        const auto& x = a.as<Matrix>().entries;
        const auto& y = b.as<Matrix>().entries;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] > y[i]) return false;
        return true;
    }
    std::optional<std::vector<Weight>> past(const Weight& b) const override {
        const auto& bound = b.as<Matrix>().entries;
        BigInt total = 1;
        for (const auto& x : bound) total *= (x + 1);
        if (total > 200000) throw std::length_error("matrix past set too large to enumerate");
        std::vector<Weight> out;
        std::vector<BigInt> cur(bound.size(), 0);
        while (true) {
            Matrix m{cur};
            if (inCarrier(m)) out.emplace_back(m);
            std::size_t i = 0;
            while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
            if (i == cur.size()) break;
            ++cur[i];
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    AdditiveOrder additiveOrderHint(const Weight& b) const override {
        return b == zero() ? AdditiveOrder::finite(1, 1) : AdditiveOrder::infinite();
    }
    std::vector<Weight> samples() const override {
        std::vector<Weight> out{zero(), one(), scalar(2)};
        Matrix ones{std::vector<BigInt>(n_ * n_, 1)};
        Matrix mixed = ones;
        for (int i = 0; i < n_ * n_; ++i) mixed.entries[i] = 1 + (i % 3);
        out.emplace_back(ones);
        if (mixed != ones) out.emplace_back(mixed);
        return out;
    }
    std::string encode(const Weight& w) const override {
        json j = json::array();
        for (const auto& x : w.as<Matrix>().entries) j.push_back(natJson(x));
        return j.dump();
    }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (isWord(j, "zero")) return zero();
        if (isWord(j, "one")) return one();
        if (!j.is_array() || j.size() != static_cast<std::size_t>(n_ * n_))
            throw ParseError("mat_n literal must be a row-major array of " + std::to_string(n_ * n_) + " naturals");
        Matrix m;
        for (const auto& x : j) m.entries.push_back(parseNat(x));
        if (!inCarrier(m)) throw ParseError("matrix " + j.dump() + " is neither positive nor scalar");
        return m;
    }

private:
    Weight scalar(int k) const {
        Matrix m{std::vector<BigInt>(n_ * n_, 0)};
        for (int i = 0; i < n_; ++i) m.entries[i * n_ + i] = k;
        return m;
    }
    bool inCarrier(const Matrix& m) const {
        if (std::all_of(m.entries.begin(), m.entries.end(), [](const BigInt& x) { return x > 0; })) return true;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const auto& x = m.entries[i * n_ + j];
                if (i != j && x != 0) return false;
                if (i == j && x != m.entries[0]) return false;
            }
        return true;
    }
    int n_;
};

// ---------------------------------------------------------------- flang

WordSet normalize(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return WordSet{std::move(v)};
}

bool isSubsequence(const std::string& small, const std::string& big) {
    std::size_t i = 0;
    for (char c : big)
        if (i < small.size() && small[i] == c) ++i;
    return i == small.size();
}

// injective f: a -> b with w a subword (scattered) of f(w); augmenting paths
bool flangLeq(const WordSet& a, const WordSet& b) {
    const auto& left = a.words;
    const auto& right = b.words;
    if (left.size() > right.size()) return false;
    std::vector<int> owner(right.size(), -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (seen[j] || !isSubsequence(left[i], right[j])) continue;
            seen[j] = true;
            if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
                owner[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < left.size(); ++i) {
        std::vector<bool> seen(right.size(), false);
        if (!augment(i, seen)) return false;
    }
    return true;
}

class FLangAlgebra final : public Basic {
public:
    explicit FLangAlgebra(std::string alphabet) : alphabet_(std::move(alphabet)) {
        flags_ = allTrue();
        flags_.commutative = alphabet_.size() <= 1 ? Tri::True : Tri::False;
    }
    std::string kind() const override { return "flang"; }
    std::string descriptor() const override {
        json j{{"kind", "flang"}, {"params", {{"alphabet", alphabet_}}}};
        return j.dump();
    }
    Weight zero() const override { return WordSet{}; }
    Weight one() const override { return WordSet{{""}}; }
    Weight add(const Weight& a, const Weight& b) const override {
        auto v = a.as<WordSet>().words;
        const auto& w = b.as<WordSet>().words;
        v.insert(v.end(), w.begin(), w.end());
        return normalize(std::move(v));
    }
    Weight mul(const Weight& a, const Weight& b) const override {
        std::vector<std::string> v;
        for (const auto& x : a.as<WordSet>().words)
            for (const auto& y : b.as<WordSet>().words) v.push_back(x + y);
        return normalize(std::move(v));
    }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override { return flangLeq(a.as<WordSet>(), b.as<WordSet>()); }
    std::optional<std::vector<Weight>> past(const Weight& b) const override {
        const auto& words = b.as<WordSet>().words;
        std::set<std::string> subs;
        for (const auto& w : words) {
            if (w.size() > 12) throw std::length_error("flang past set too large to enumerate");
            for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
                std::string s;
                for (std::size_t i = 0; i < w.size(); ++i)
                    if ((mask >> i) & 1u) s += w[i];
                subs.insert(s);
            }
        }
        std::vector<std::string> cand(subs.begin(), subs.end());
        if (cand.size() > 22) throw std::length_error("flang past set too large to enumerate");
        std::vector<Weight> out;
        for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) > words.size()) continue;
            WordSet s;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if ((mask >> i) & 1u) s.words.push_back(cand[i]);
            if (flangLeq(s, b.as<WordSet>())) out.emplace_back(std::move(s));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    AdditiveOrder additiveOrderHint(const Weight&) const override { return AdditiveOrder::finite(1, 1); }
    std::vector<Weight> samples() const override {
        std::vector<Weight> out{zero(), one()};
        if (!alphabet_.empty()) {
            std::string a(1, alphabet_[0]);
            std::string b(1, alphabet_.size() > 1 ? alphabet_[1] : alphabet_[0]);
            out.emplace_back(WordSet{{a}});
            out.emplace_back(normalize({a, a + b}));
            out.emplace_back(normalize({"", b}));
        }
        return out;
    }
    std::string encode(const Weight& w) const override { return json(w.as<WordSet>().words).dump(); }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (!j.is_array()) throw ParseError("flang literal must be an array of strings");
        std::vector<std::string> v;
        for (const auto& x : j) {
            if (!x.is_string()) throw ParseError("flang literal must be an array of strings");
            auto s = x.get<std::string>();
            for (char c : s)
                if (alphabet_.find(c) == std::string::npos)
                    throw ParseError("letter '" + std::string(1, c) + "' not in alphabet \"" + alphabet_ + "\"");
            v.push_back(std::move(s));
        }
        return normalize(std::move(v));
    }

private:
    std::string alphabet_;
};

// ---------------------------------------------------------------- plusplus

// N with a new zero; + is both operations, 0 is the unit
class PlusPlusAlgebra final : public Basic {
public:
    PlusPlusAlgebra() {
        flags_ = allTrue();
        flags_.left_distributive = Tri::False;
        flags_.right_distributive = Tri::False;
        flags_.idempotent = Tri::False;
        flags_.additively_locally_finite = Tri::False;
    }
    std::string kind() const override { return "plusplus"; }
    std::string descriptor() const override { return R"({"kind":"plusplus","params":{}})"; }
    Weight zero() const override { return Mark::Zero; }
    Weight one() const override { return Weight(0); }
    Weight add(const Weight& a, const Weight& b) const override {
        if (a.is<Mark>()) return b;
        if (b.is<Mark>()) return a;
        return BigInt(a.as<BigInt>() + b.as<BigInt>());
    }
    Weight mul(const Weight& a, const Weight& b) const override {
        if (a.is<Mark>() || b.is<Mark>()) return Mark::Zero;
        return BigInt(a.as<BigInt>() + b.as<BigInt>());
    }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override {
        if (a.is<Mark>()) return true;
        if (b.is<Mark>()) return false;
        return a.as<BigInt>() <= b.as<BigInt>();
    }
    std::optional<std::vector<Weight>> past(const Weight& b) const override {
        std::vector<Weight> out{Mark::Zero};
        if (!b.is<Mark>()) {
            auto rest = range(0, b.as<BigInt>());
            out.insert(out.end(), rest.begin(), rest.end());
        }
        return out;
    }
    AdditiveOrder additiveOrderHint(const Weight& b) const override {
        if (b.is<Mark>() || b.as<BigInt>() == 0) return AdditiveOrder::finite(1, 1);
        return AdditiveOrder::infinite();
    }
    std::vector<Weight> samples() const override { return {Mark::Zero, 0, 1, 2, 5}; }
    std::string encode(const Weight& w) const override {
        return w.is<Mark>() ? quoted("zero") : quoted(w.as<BigInt>().str());
    }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (isWord(j, "zero")) return Mark::Zero;
        return parseNat(j);
    }
};

// ---------------------------------------------------------------- truncated_plus

class TruncatedPlusAlgebra final : public Basic {
public:
    static constexpr int kCap = 100;

    TruncatedPlusAlgebra() {
        flags_ = allTrue();
        flags_.left_distributive = Tri::False;
        flags_.right_distributive = Tri::False;
        flags_.idempotent = Tri::False;
    }
    std::string kind() const override { return "truncated_plus"; }
    std::string descriptor() const override { return R"({"kind":"truncated_plus","params":{}})"; }
    Weight zero() const override { return Weight(0); }
    Weight one() const override { return Weight(1); }
    Weight add(const Weight& a, const Weight& b) const override {
        const auto& x = a.as<BigInt>();
        const auto& y = b.as<BigInt>();
        if (x <= kCap && y <= kCap) return BigInt(std::min<BigInt>(x + y, kCap));
        return std::max(x, y);
    }
    Weight mul(const Weight& a, const Weight& b) const override { return BigInt(a.as<BigInt>() * b.as<BigInt>()); }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override { return a.as<BigInt>() <= b.as<BigInt>(); }
    std::optional<std::vector<Weight>> past(const Weight& b) const override { return range(0, b.as<BigInt>()); }
    AdditiveOrder additiveOrderHint(const Weight& b) const override {
        const auto& x = b.as<BigInt>();
        if (x == 0 || x > kCap) return AdditiveOrder::finite(1, 1);
        BigInt steps = (kCap + x - 1) / x;
        return AdditiveOrder::finite(steps.convert_to<std::uint64_t>(), 1);
    }
    std::vector<Weight> samples() const override { return {0, 1, 2, 50, 60, 100, 150}; }
    std::string encode(const Weight& w) const override { return quoted(w.as<BigInt>().str()); }
    Weight decode(std::string_view text) const override { return parseNat(parseJson(text)); }
};

// ---------------------------------------------------------------- induced

class InducedAlgebra final : public Basic {
public:
    InducedAlgebra(std::string add, std::string mul) : add_(std::move(add)), mul_(std::move(mul)) {
        if (add_ != "plus" && add_ != "max") throw std::invalid_argument("induced: add must be plus or max");
        if (mul_ != "plus" && mul_ != "affine") throw std::invalid_argument("induced: mul must be plus or affine");
        flags_ = allTrue();
        if (add_ == "plus") {
            flags_.left_distributive = Tri::False;
            flags_.right_distributive = Tri::False;
            flags_.idempotent = Tri::False;
            flags_.additively_locally_finite = Tri::False;
        }
    }
    std::string kind() const override { return "induced"; }
    std::string descriptor() const override {
        json j{{"kind", "induced"}, {"params", {{"add", add_}, {"mul", mul_}}}};
        return j.dump();
    }
    Weight zero() const override { return Mark::Zero; }
    Weight one() const override { return Mark::One; }
    Weight add(const Weight& a, const Weight& b) const override {
        if (a == zero()) return b;
        if (b == zero()) return a;
        if (a == one()) return b;
        if (b == one()) return a;
        const auto& x = a.as<BigInt>();
        const auto& y = b.as<BigInt>();
        return add_ == "plus" ? BigInt(x + y) : std::max(x, y);
    }
    Weight mul(const Weight& a, const Weight& b) const override {
        if (a == zero() || b == zero()) return zero();
        if (a == one()) return b;
        if (b == one()) return a;
        const auto& x = a.as<BigInt>();
        const auto& y = b.as<BigInt>();
        return mul_ == "plus" ? BigInt(x + y) : BigInt(x + y + 2 * x * y);
    }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override {
        if (rank(a) != rank(b)) return rank(a) < rank(b);
        return rank(a) < 2 || a.as<BigInt>() <= b.as<BigInt>();
    }
    std::optional<std::vector<Weight>> past(const Weight& b) const override {
        std::vector<Weight> out{zero()};
        if (b == zero()) return out;
        out.push_back(one());
        if (b == one()) return out;
        auto rest = range(1, b.as<BigInt>());
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
    AdditiveOrder additiveOrderHint(const Weight& b) const override {
        if (b.is<Mark>() || add_ == "max") return AdditiveOrder::finite(1, 1);
        return AdditiveOrder::infinite();
    }
    std::vector<Weight> samples() const override { return {zero(), one(), 1, 2, 3}; }
    std::string encode(const Weight& w) const override {
        if (w == zero()) return quoted("zero");
        if (w == one()) return quoted("one");
        return quoted(w.as<BigInt>().str());
    }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (isWord(j, "zero")) return zero();
        if (isWord(j, "one")) return one();
        BigInt n = parseNat(j);
        if (n == 0) throw ParseError("induced: base elements are positive");
        return n;
    }

private:
    static int rank(const Weight& w) {
        if (w.is<Mark>()) return w.as<Mark>() == Mark::Zero ? 0 : 1;
        return 2;
    }
    std::string add_;
    std::string mul_;
};

// ---------------------------------------------------------------- two-chain

class TwoChainAlgebra final : public Basic {
public:
    TwoChainAlgebra() {
        flags_ = allTrue();
        flags_.past_finite = Tri::False;
        // 1' x (2 v 1') = 2' but (1' x 2) v (1' x 1') = 3'
        flags_.left_distributive = Tri::False;
        flags_.right_distributive = Tri::False;
    }
    std::string kind() const override { return "twochain"; }
    std::string descriptor() const override { return R"({"kind":"twochain","params":{}})"; }
    Weight zero() const override { return Mark::Zero; }
    Weight one() const override { return Mark::One; }
    Weight add(const Weight& a, const Weight& b) const override { return leq(a, b) ? b : a; }
    Weight mul(const Weight& a, const Weight& b) const override {
        if (a == zero() || b == zero()) return zero();
        if (a == one()) return b;
        if (b == one()) return a;
        BigInt s = value(a) + value(b);
        if (a.is<Primed>() || b.is<Primed>()) return Primed{s};
        return s;
    }
    bool hasOrder() const override { return true; }
    bool leq(const Weight& a, const Weight& b) const override {
        int ra = rank(a), rb = rank(b);
        if (ra != rb) return ra < rb;
        return ra < 2 || value(a) <= value(b);
    }
    AdditiveOrder additiveOrderHint(const Weight&) const override { return AdditiveOrder::finite(1, 1); }
    std::vector<Weight> samples() const override { return {zero(), one(), 1, 2, Primed{1}, Primed{3}}; }
    std::string encode(const Weight& w) const override {
        if (w == zero()) return quoted("zero");
        if (w == one()) return quoted("one");
        if (w.is<Primed>()) return quoted(w.as<Primed>().value.str() + "'");
        return quoted(w.as<BigInt>().str());
    }
    Weight decode(std::string_view text) const override {
        auto j = parseJson(text);
        if (isWord(j, "zero")) return zero();
        if (isWord(j, "one")) return one();
        if (j.is_string()) {
            auto s = j.get<std::string>();
            if (!s.empty() && s.back() == '\'') {
                BigInt n = parseNat(json(s.substr(0, s.size() - 1)));
                if (n == 0) throw ParseError("twochain: 0' is not an element");
                return Primed{n};
            }
        }
        BigInt n = parseNat(j);
        if (n == 0) throw ParseError("twochain: use \"zero\" or \"one\" for the constants");
        return n;
    }

private:
    static int rank(const Weight& w) {
        if (w.is<Mark>()) return w.as<Mark>() == Mark::Zero ? 0 : 1;
        return w.is<Primed>() ? 3 : 2;
    }
    static const BigInt& value(const Weight& w) { return w.is<Primed>() ? w.as<Primed>().value : w.as<BigInt>(); }
};

// ---------------------------------------------------------------- decorators

class FlagOverride final : public Algebra {
public:
    FlagOverride(AlgebraPtr base, Flags flags) : base_(std::move(base)), flags_(flags) {}
    std::string kind() const override { return base_->kind(); }
    std::string descriptor() const override { return base_->descriptor(); }
    Weight zero() const override { return base_->zero(); }
    Weight one() const override { return base_->one(); }
    Weight add(const Weight& a, const Weight& b) const override { return base_->add(a, b); }
    Weight mul(const Weight& a, const Weight& b) const override { return base_->mul(a, b); }
    bool hasOrder() const override { return base_->hasOrder(); }
    bool leq(const Weight& a, const Weight& b) const override { return base_->leq(a, b); }
    std::optional<std::vector<Weight>> past(const Weight& b) const override { return base_->past(b); }
    std::optional<std::vector<Weight>> carrier() const override { return base_->carrier(); }
    AdditiveOrder additiveOrderHint(const Weight& b) const override { return base_->additiveOrderHint(b); }
    std::vector<Weight> samples() const override { return base_->samples(); }
    std::string encode(const Weight& w) const override { return base_->encode(w); }
    Weight decode(std::string_view text) const override { return base_->decode(text); }
    const Flags& flags() const override { return flags_; }

private:
    AlgebraPtr base_;
    Flags flags_;
};

// Finite quotient with precomputed operation tables. Class i is ClassRef{i}.
class QuotientAlgebra final : public Basic {
public:
    QuotientAlgebra(AlgebraPtr base, std::vector<Weight> reps, std::function<int(const Weight&)> classify,
                    std::string descriptor)
        : base_(std::move(base)), reps_(std::move(reps)), classify_(std::move(classify)),
          descriptor_(std::move(descriptor)) {
        const int m = size();
        addTable_.resize(m * m);
        mulTable_.resize(m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                addTable_[i * m + j] = classify_(base_->add(reps_[i], reps_[j]));
                mulTable_[i * m + j] = classify_(base_->mul(reps_[i], reps_[j]));
            }
        zero_ = classify_(base_->zero());
        one_ = classify_(base_->one());
        if (zero_ == one_) throw std::invalid_argument("degenerate quotient: zero and one coincide");
        computeFlags();
    }
    std::string kind() const override { return "quotient"; }
    std::string descriptor() const override { return descriptor_; }
    Weight zero() const override { return ClassRef{zero_}; }
    Weight one() const override { return ClassRef{one_}; }
    Weight add(const Weight& a, const Weight& b) const override {
        return ClassRef{addTable_[a.as<ClassRef>().index * size() + b.as<ClassRef>().index]};
    }
    Weight mul(const Weight& a, const Weight& b) const override {
        return ClassRef{mulTable_[a.as<ClassRef>().index * size() + b.as<ClassRef>().index]};
    }
    std::optional<std::vector<Weight>> carrier() const override {
        std::vector<Weight> out;
        for (int i = 0; i < size(); ++i) out.emplace_back(ClassRef{i});
        return out;
    }
    // finite carrier: walk b, 2b, ... until a repeat
    AdditiveOrder additiveOrderHint(const Weight& b) const override {
        std::map<Weight, std::uint64_t> seen;
        Weight cur = b;
        for (std::uint64_t n = 1;; ++n) {
            auto [it, fresh] = seen.emplace(cur, n);
            if (!fresh) return AdditiveOrder::finite(it->second, n - it->second);
            cur = add(cur, b);
        }
    }
    std::vector<Weight> samples() const override { return *carrier(); }
    std::string encode(const Weight& w) const override { return base_->encode(reps_.at(w.as<ClassRef>().index)); }
    Weight decode(std::string_view text) const override { return ClassRef{classify_(base_->decode(text))}; }

    int size() const { return static_cast<int>(reps_.size()); }
    int classify(const Weight& w) const { return classify_(w); }

private:
    void computeFlags() {
        const int m = size();
        auto A = [&](int i, int j) { return addTable_[i * m + j]; };
        auto M = [&](int i, int j) { return mulTable_[i * m + j]; };
        bool comm = true, ld = true, rd = true, idem = true;
        for (int a = 0; a < m; ++a) {
            idem = idem && A(a, a) == a;
            for (int b = 0; b < m; ++b) {
                comm = comm && M(a, b) == M(b, a);
                for (int c = 0; c < m; ++c) {
                    ld = ld && M(a, A(b, c)) == A(M(a, b), M(a, c));
                    rd = rd && M(A(a, b), c) == A(M(a, c), M(b, c));
                }
            }
        }
        auto tri = [](bool b) { return b ? Tri::True : Tri::False; };
        flags_.commutative = tri(comm);
        flags_.left_distributive = tri(ld);
        flags_.right_distributive = tri(rd);
        flags_.idempotent = tri(idem);
        flags_.monotonic = Tri::Unknown;
        flags_.past_finite = Tri::Unknown;
        flags_.additively_locally_finite = Tri::True;
    }

    AlgebraPtr base_;
    std::vector<Weight> reps_;
    std::function<int(const Weight&)> classify_;
    std::string descriptor_;
    std::vector<int> addTable_;
    std::vector<int> mulTable_;
    int zero_ = 0;
    int one_ = 0;
};

}  // namespace

namespace algebras {
AlgebraPtr boolean() { return std::make_shared<BooleanAlgebra>(); }
AlgebraPtr naturals() { return std::make_shared<NaturalsAlgebra>(); }
AlgebraPtr arctic() { return std::make_shared<ArcticAlgebra>(); }
AlgebraPtr tropical() { return std::make_shared<TropicalAlgebra>(); }
AlgebraPtr lcm() { return std::make_shared<LcmAlgebra>(); }
AlgebraPtr fset() { return std::make_shared<FSetAlgebra>(); }
AlgebraPtr matrices(int n) {
    if (n < 1) throw std::invalid_argument("mat_n requires n >= 1");
    return std::make_shared<MatrixAlgebra>(n);
}
AlgebraPtr flang(std::string alphabet) {
    std::string sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("flang alphabet has repeated letters");
    return std::make_shared<FLangAlgebra>(std::move(alphabet));
}
AlgebraPtr plusplus() { return std::make_shared<PlusPlusAlgebra>(); }
AlgebraPtr truncatedPlus() { return std::make_shared<TruncatedPlusAlgebra>(); }
AlgebraPtr induced(std::string add, std::string mul) {
    return std::make_shared<InducedAlgebra>(std::move(add), std::move(mul));
}
AlgebraPtr twoChain() { return std::make_shared<TwoChainAlgebra>(); }
}  // namespace algebras

AlgebraPtr withFlags(AlgebraPtr alg, Flags flags) { return std::make_shared<FlagOverride>(std::move(alg), flags); }

namespace {

AlgebraPtr fromJson(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("algebra descriptor needs a string \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    const json params = j.value("params", json::object());
    if (kind == "boolean") return algebras::boolean();
    if (kind == "naturals") return algebras::naturals();
    if (kind == "arctic") return algebras::arctic();
    if (kind == "tropical") return algebras::tropical();
    if (kind == "lcm") return algebras::lcm();
    if (kind == "fset") return algebras::fset();
    if (kind == "mat_n") {
        if (!params.contains("n") || !params["n"].is_number_integer())
            throw std::invalid_argument("mat_n needs integer param n");
        return algebras::matrices(params["n"].get<int>());
    }
    if (kind == "flang") {
        if (!params.contains("alphabet") || !params["alphabet"].is_string())
            throw std::invalid_argument("flang needs string param alphabet");
        return algebras::flang(params["alphabet"].get<std::string>());
    }
    if (kind == "plusplus") return algebras::plusplus();
    if (kind == "truncated_plus") return algebras::truncatedPlus();
    if (kind == "induced") return algebras::induced(params.value("add", "plus"), params.value("mul", "plus"));
    if (kind == "twochain") return algebras::twoChain();
    if (kind == "quotient") {
        if (!params.contains("base")) throw std::invalid_argument("quotient needs param base");
        auto base = fromJson(params["base"]);
        const auto by = params.value("by", "");
        if (by == "threshold") return quotient(base, QuotientKind::threshold(params.value("n", 0u))).algebra;
        if (by == "modulo") return quotient(base, QuotientKind::modulo(params.value("n", 0u))).algebra;
        if (by == "pastCut") {
            if (!params.contains("b")) throw std::invalid_argument("pastCut quotient needs param b");
            return quotient(base, QuotientKind::pastCut(base->decode(params["b"].dump()))).algebra;
        }
        throw std::invalid_argument("unknown quotient kind \"" + by + "\"");
    }
    throw std::invalid_argument("unknown algebra kind \"" + kind + "\"");
}

}  // namespace

AlgebraPtr makeAlgebra(std::string_view descriptorJson) {
    json j;
    try {
        j = json::parse(descriptorJson);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad algebra descriptor: ") + e.what());
    }
    return fromJson(j);
}

// ---------------------------------------------------------------- axioms

std::vector<Violation> checkAxioms(const Algebra& alg, const std::vector<Weight>& samples) {
    std::vector<Violation> out;
    auto fail = [&](std::string law, std::vector<Weight> tuple) { out.push_back({std::move(law), std::move(tuple)}); };
    const Weight z = alg.zero(), o = alg.one();
    if (z == o) fail("zero differs from one", {z});

    // first counterexample, if any
    auto forAll2 = [&](auto&& law) {
        for (const auto& a : samples)
            for (const auto& b : samples)
                if (!law(a, b)) return std::optional<std::vector<Weight>>({a, b});
        return std::optional<std::vector<Weight>>();
    };
    auto forAll3 = [&](auto&& law) {
        for (const auto& a : samples)
            for (const auto& b : samples)
                for (const auto& c : samples)
                    if (!law(a, b, c)) return std::optional<std::vector<Weight>>({a, b, c});
        return std::optional<std::vector<Weight>>();
    };

    if (auto bad = forAll3([&](auto& a, auto& b, auto& c) { return alg.add(alg.add(a, b), c) == alg.add(a, alg.add(b, c)); }))
        fail("add associative", *bad);
    if (auto bad = forAll2([&](auto& a, auto& b) { return alg.add(a, b) == alg.add(b, a); }))
        fail("add commutative", *bad);
    for (const auto& a : samples) {
        if (alg.add(a, z) != a || alg.add(z, a) != a) fail("zero is additive identity", {a});
        if (alg.mul(a, o) != a || alg.mul(o, a) != a) fail("one is multiplicative identity", {a});
        if (alg.mul(a, z) != z || alg.mul(z, a) != z) fail("zero annihilates", {a});
    }
    if (auto bad = forAll3([&](auto& a, auto& b, auto& c) { return alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)); }))
        fail("mul associative", *bad);

    const Flags& f = alg.flags();
    auto checkFlag = [&](Tri flag, const std::string& name, std::optional<std::vector<Weight>> counterexample) {
        if (flag == Tri::True && counterexample) fail(name, *counterexample);
        if (flag == Tri::False && !counterexample) fail("flag mismatch: " + name + " declared false but holds on samples", {});
    };
    checkFlag(f.commutative, "mul commutative",
              forAll2([&](auto& a, auto& b) { return alg.mul(a, b) == alg.mul(b, a); }));
    checkFlag(f.left_distributive, "left distributive", forAll3([&](auto& a, auto& b, auto& c) {
                  return alg.mul(a, alg.add(b, c)) == alg.add(alg.mul(a, b), alg.mul(a, c));
              }));
    checkFlag(f.right_distributive, "right distributive", forAll3([&](auto& a, auto& b, auto& c) {
                  return alg.mul(alg.add(a, b), c) == alg.add(alg.mul(a, c), alg.mul(b, c));
              }));
    {
        std::optional<std::vector<Weight>> bad;
        for (const auto& a : samples)
            if (!bad && alg.add(a, a) != a) bad = std::vector<Weight>{a};
        checkFlag(f.idempotent, "add idempotent", bad);
    }

    if (f.monotonic == Tri::True && !alg.hasOrder()) fail("monotonic declared without an order", {});
    if (f.monotonic != Tri::Unknown && alg.hasOrder()) {
        auto grows = forAll2([&](auto& a, auto& b) { return alg.leq(a, alg.add(a, b)); });
        auto strict = forAll3([&](auto& a, auto& b, auto& c) {
            if (a == z || b == z || c == z || b == o) return true;
            return less(alg, alg.mul(a, c), alg.mul(alg.mul(a, b), c));
        });
        if (f.monotonic == Tri::True) {
            if (grows) fail("a <= a + b", *grows);
            if (strict) fail("a * c < a * b * c", *strict);
        } else if (!grows && !strict) {
            fail("flag mismatch: monotonic declared false but holds on samples", {});
        }
    }

    if (f.past_finite == Tri::True) {
        for (const auto& b : samples) {
            auto p = alg.past(b);
            if (!p) {
                fail("past enumeration available", {b});
                continue;
            }
            std::set<Weight> inPast(p->begin(), p->end());
            for (const auto& a : *p)
                if (!alg.leq(a, b)) fail("past(b) members are below b", {a, b});
            for (const auto& a : samples)
                if (alg.leq(a, b) != (inPast.count(a) > 0)) fail("a in past(b) iff a <= b", {a, b});
        }
    }

    for (const auto& b : samples) {
        auto hint = alg.additiveOrderHint(b);
        if (hint.kind == AdditiveOrder::Kind::Finite) {
            std::vector<Weight> seq{b};
            const auto last = hint.index + hint.period - 1;
            while (seq.size() < last) seq.push_back(alg.add(seq.back(), b));
            std::set<Weight> distinct(seq.begin(), seq.end());
            Weight next = alg.add(seq.back(), b);
            if (distinct.size() != seq.size() || next != seq[hint.index - 1]) fail("additive order hint", {b});
        }
        if (f.additively_locally_finite == Tri::True && hint.kind == AdditiveOrder::Kind::Infinite)
            fail("additively locally finite but infinite additive order", {b});
    }
    if (f.additively_locally_finite == Tri::False) {
        bool anyInfinite = false;
        for (const auto& b : samples)
            anyInfinite = anyInfinite || additiveOrder(alg, b, 200).kind != AdditiveOrder::Kind::Finite;
        if (!anyInfinite) fail("flag mismatch: additively locally finite declared false but all samples have finite order", {});
    }
    return out;
}

AdditiveOrder additiveOrder(const Algebra& alg, const Weight& b, std::uint64_t fuel) {
    auto hint = alg.additiveOrderHint(b);
    if (hint.kind != AdditiveOrder::Kind::Unknown) return hint;
    const Flags& f = alg.flags();
    if ((isTrue(f.left_distributive) || isTrue(f.right_distributive)) && isTrue(f.monotonic)) {
        if (alg.add(alg.one(), alg.one()) == alg.one() || b == alg.zero()) return AdditiveOrder::finite(1, 1);
        return AdditiveOrder::infinite();
    }
    std::map<Weight, std::uint64_t> seen;
    Weight cur = b;
    for (std::uint64_t n = 1; n <= fuel; ++n) {
        auto [it, fresh] = seen.emplace(cur, n);
        if (!fresh) return AdditiveOrder::finite(it->second, n - it->second);
        cur = alg.add(cur, b);
    }
    return AdditiveOrder::unknown();
}

// ---------------------------------------------------------------- quotients

Quotient quotient(AlgebraPtr alg, const QuotientKind& qk) {
    json desc{{"kind", "quotient"}, {"params", {{"base", json::parse(alg->descriptor())}}}};
    std::vector<Weight> reps;
    std::function<int(const Weight&)> classify;
    switch (qk.kind) {
        case QuotientKind::Kind::Threshold: {
            if (alg->kind() != "naturals") throw std::invalid_argument("threshold quotient needs the naturals");
            const unsigned n = qk.n;
            for (unsigned i = 0; i <= n + 1; ++i) reps.emplace_back(BigInt(i));
            classify = [n](const Weight& w) {
                const auto& x = w.as<BigInt>();
                return x > n ? static_cast<int>(n + 1) : x.convert_to<int>();
            };
            desc["params"]["by"] = "threshold";
            desc["params"]["n"] = n;
            break;
        }
        case QuotientKind::Kind::Modulo: {
            if (alg->kind() != "naturals") throw std::invalid_argument("modulo quotient needs the naturals");
            const unsigned n = qk.n;
            if (n == 0) throw std::invalid_argument("modulo quotient needs n >= 1");
            if (n == 1) throw std::invalid_argument("modulo(1) is degenerate: zero and one coincide");
            for (unsigned i = 0; i < n; ++i) reps.emplace_back(BigInt(i));
            classify = [n](const Weight& w) { return static_cast<BigInt>(w.as<BigInt>() % n).convert_to<int>(); };
            desc["params"]["by"] = "modulo";
            desc["params"]["n"] = n;
            break;
        }
        case QuotientKind::Kind::PastCut: {
            if (!isTrue(alg->flags().past_finite)) throw NotApplicable("pastCut needs a past-finite algebra");
            auto past = alg->past(qk.cut);
            if (!past) throw NotApplicable("pastCut needs past enumeration");
            auto index = std::make_shared<std::map<Weight, int>>();
            for (const auto& a : *past) {
                index->emplace(a, static_cast<int>(reps.size()));
                reps.push_back(a);
            }
            // representative of the rest: least element found by one round
            // of closure, falling back to the samples
            std::vector<Weight> outside;
            for (const auto& a : *past)
                for (const auto& b : *past)
                    for (const auto& c : {alg->add(a, b), alg->mul(a, b)})
                        if (!index->count(c)) outside.push_back(c);
            if (outside.empty())
                for (const auto& s : alg->samples())
                    if (!index->count(s)) outside.push_back(s);
            if (!outside.empty()) {
                std::sort(outside.begin(), outside.end());
                Weight best = outside.front();
                for (const auto& c : outside)
                    if (alg->leq(c, best)) best = c;
                reps.push_back(best);
            }
            const int rest = outside.empty() ? -1 : static_cast<int>(reps.size()) - 1;
            classify = [index, rest](const Weight& w) {
                auto it = index->find(w);
                if (it != index->end()) return it->second;
                if (rest < 0) throw std::logic_error("pastCut: element outside past(b) but no class for it");
                return rest;
            };
            desc["params"]["by"] = "pastCut";
            desc["params"]["b"] = json::parse(alg->encode(qk.cut));
            break;
        }
    }
    auto q = std::make_shared<QuotientAlgebra>(alg, reps, classify, desc.dump());
    Homomorphism h{alg, q, [classify](const Weight& w) { return Weight(ClassRef{classify(w)}); }};
    return Quotient{q, std::move(h), std::move(reps)};
}

}  // namespace wta
