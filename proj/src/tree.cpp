#include "wta/tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wta/errors.hpp"

namespace wta {

RankedAlphabet::RankedAlphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> names;
    bool nullary = false;
    for (const auto& s : symbols_) {
        if (s.rank < 0) throw std::invalid_argument("symbol " + s.name + " has negative rank");
        if (s.name.empty()) throw std::invalid_argument("empty symbol name");
        if (!names.insert(s.name).second) throw std::invalid_argument("duplicate symbol " + s.name);
        nullary = nullary || s.rank == 0;
    }
    if (!nullary) throw std::invalid_argument("alphabet needs a nullary symbol");
}

int RankedAlphabet::maxRank() const {
    int m = 0;
    for (const auto& s : symbols_) m = std::max(m, s.rank);
    return m;
}

std::optional<SymbolId> RankedAlphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name) return static_cast<SymbolId>(i);
    return std::nullopt;
}

SymbolId RankedAlphabet::id(std::string_view name) const {
    if (auto s = find(name)) return *s;
    throw ParseError("unknown symbol \"" + std::string(name) + "\"");
}

Term hole() { return Term{}; }
Term leaf(SymbolId s) { return Term{s, {}}; }
Term node(SymbolId s, std::vector<Term> children) { return Term{s, std::move(children)}; }

int holeCount(const Term& t) {
    if (t.isHole()) return 1;
    int n = 0;
    for (const auto& c : t.children) n += holeCount(c);
    return n;
}

bool isContext(const Term& t) { return holeCount(t) == 1; }

int height(const Term& t) {
    int h = 0;
    for (const auto& c : t.children) h = std::max(h, 1 + height(c));
    return h;
}

int size(const Term& t) {
    int n = 1;
    for (const auto& c : t.children) n += size(c);
    return n;
}

namespace {
void collect(const Term& t, Position& cur, std::vector<Position>& out) {
    out.push_back(cur);
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        cur.push_back(static_cast<int>(i));
        collect(t.children[i], cur, out);
        cur.pop_back();
    }
}

bool findHole(const Term& t, Position& cur) {
    if (t.isHole()) return true;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        cur.push_back(static_cast<int>(i));
        if (findHole(t.children[i], cur)) return true;
        cur.pop_back();
    }
    return false;
}
}  // namespace

std::vector<Position> positions(const Term& t) {
    std::vector<Position> out;
    Position cur;
    collect(t, cur, out);
    return out;
}

const Term& subtermAt(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (int i : p) cur = &cur->children.at(i);
    return *cur;
}

Term replaceAt(const Term& t, const Position& p, Term z) {
    Term out = t;
    Term* cur = &out;
    for (int i : p) cur = &cur->children.at(i);
    *cur = std::move(z);
    return out;
}

Position holePosition(const Term& c) {
    if (holeCount(c) != 1) throw std::invalid_argument("not a context");
    Position p;
    findHole(c, p);
    return p;
}

Term substitute(const Term& c, const Term& z) { return replaceAt(c, holePosition(c), z); }

Term power(const Term& c, int n) {
    Term out = hole();
    for (int i = 0; i < n; ++i) out = substitute(c, out);
    return out;
}

namespace {

// Calls f on every k-tuple over [0, bound) in lexicographic order that has
// at least one entry >= from.
template <class F>
void forTuples(int k, std::size_t from, std::size_t bound, F&& f) {
    if (bound == 0) return;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= from; })) f(idx);
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == bound) idx[pos--] = 0;
        if (pos < 0) return;
    }
}

}  // namespace

std::vector<Term> enumerate(const RankedAlphabet& alphabet, TermKind kind, int maxHeight) {
    std::vector<Term> trees;
    std::size_t levelStart = 0;
    for (SymbolId s = 0; s < alphabet.size(); ++s)
        if (alphabet.rank(s) == 0) trees.push_back(leaf(s));
    std::vector<std::size_t> treeLevelEnd{trees.size()};
    const int treeHeight = kind == TermKind::Trees ? maxHeight : maxHeight - 1;
    for (int h = 1; h <= treeHeight; ++h) {
        const std::size_t bound = trees.size();
        for (SymbolId s = 0; s < alphabet.size(); ++s) {
            const int k = alphabet.rank(s);
            if (k == 0) continue;
            forTuples(k, levelStart, bound, [&](const std::vector<std::size_t>& idx) {
                Term t{s, {}};
                for (auto i : idx) t.children.push_back(trees[i]);
                trees.push_back(std::move(t));
            });
        }
        levelStart = bound;
        treeLevelEnd.push_back(trees.size());
    }
    if (kind == TermKind::Trees) return trees;
    if (maxHeight < 0) return {};

    // contexts: level h puts a context of height <= h-1 at one child and
    // trees of height <= h-1 elsewhere, with some child of height h-1
    std::vector<Term> contexts{hole()};
    std::vector<std::size_t> ctxLevelEnd{1};
    for (int h = 1; h <= maxHeight; ++h) {
        const std::size_t ctxBound = contexts.size();
        const std::size_t ctxFrom = h >= 2 ? ctxLevelEnd[h - 2] : 0;
        const std::size_t treeBound = treeLevelEnd[h - 1];
        const std::size_t treeFrom = h >= 2 ? treeLevelEnd[h - 2] : 0;
        for (SymbolId s = 0; s < alphabet.size(); ++s) {
            const int k = alphabet.rank(s);
            for (int holeAt = 0; holeAt < k; ++holeAt) {
                // mixed tuple: index for the hole child ranges over contexts
                std::vector<std::size_t> idx(k, 0);
                auto boundOf = [&](int i) { return i == holeAt ? ctxBound : treeBound; };
                auto fresh = [&](int i) { return idx[i] >= (i == holeAt ? ctxFrom : treeFrom); };
                while (true) {
                    bool top = false;
                    for (int i = 0; i < k; ++i) top = top || fresh(i);
                    if (top) {
                        Term t{s, {}};
                        for (int i = 0; i < k; ++i) t.children.push_back(i == holeAt ? contexts[idx[i]] : trees[idx[i]]);
                        contexts.push_back(std::move(t));
                    }
                    int pos = k - 1;
                    while (pos >= 0 && ++idx[pos] == boundOf(pos)) idx[pos--] = 0;
                    if (pos < 0) break;
                }
            }
        }
        ctxLevelEnd.push_back(contexts.size());
    }
    return contexts;
}

TreeStream::TreeStream(const RankedAlphabet& alphabet) : alphabet_(alphabet) {}

void TreeStream::growLevel() {
    if (builtHeight_ < 0) {
        for (SymbolId s = 0; s < alphabet_.size(); ++s)
            if (alphabet_.rank(s) == 0) all_.push_back(leaf(s));
        builtHeight_ = 0;
        return;
    }
    const std::size_t bound = all_.size();
    for (SymbolId s = 0; s < alphabet_.size(); ++s) {
        const int k = alphabet_.rank(s);
        if (k == 0) continue;
        forTuples(k, prevLevelStart_, bound, [&](const std::vector<std::size_t>& idx) {
            Term t{s, {}};
            for (auto i : idx) t.children.push_back(all_[i]);
            all_.push_back(std::move(t));
        });
    }
    prevLevelStart_ = bound;
    ++builtHeight_;
}

const Term* TreeStream::next() {
    while (cursor_ >= all_.size()) {
        const auto before = all_.size();
        growLevel();
        if (all_.size() == before && builtHeight_ > 0) return nullptr;
    }
    ++produced_;
    return &all_[cursor_++];
}

// ---------------------------------------------------------------- term syntax

namespace {

class TermParser {
public:
    TermParser(const RankedAlphabet& a, std::string_view s) : alphabet_(a), text_(s) {}

    Term parseAll() {
        Term t = parse();
        skipSpace();
        if (pos_ != text_.size()) fail("trailing input");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("term parse error at position " + std::to_string(pos_) + ": " + msg);
    }
    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    static bool nameChar(char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' && c != '[' && c != ']';
    }
    Term parse() {
        skipSpace();
        if (text_.substr(pos_, 2) == "[]") {
            pos_ += 2;
            return hole();
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && nameChar(text_[pos_])) ++pos_;
        if (pos_ == start) fail("expected a symbol");
        const std::string name(text_.substr(start, pos_ - start));
        auto sym = alphabet_.find(name);
        if (!sym) {
            pos_ = start;
            fail("unknown symbol \"" + name + "\"");
        }
        Term t{*sym, {}};
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            while (true) {
                t.children.push_back(parse());
                skipSpace();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < text_.size() && text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')'");
            }
        }
        if (static_cast<int>(t.children.size()) != alphabet_.rank(*sym))
            fail("symbol \"" + name + "\" has rank " + std::to_string(alphabet_.rank(*sym)) + " but got " +
                 std::to_string(t.children.size()) + " children");
        return t;
    }

    const RankedAlphabet& alphabet_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

void format(const RankedAlphabet& a, const Term& t, std::string& out) {
    if (t.isHole()) {
        out += "[]";
        return;
    }
    out += a[t.symbol].name;
    if (t.children.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ',';
        format(a, t.children[i], out);
    }
    out += ')';
}

}  // namespace

Term parseTerm(const RankedAlphabet& alphabet, std::string_view text) { return TermParser(alphabet, text).parseAll(); }

std::string formatTerm(const RankedAlphabet& alphabet, const Term& t) {
    std::string out;
    format(alphabet, t, out);
    return out;
}

}  // namespace wta
