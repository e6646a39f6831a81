#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wta {

using SymbolId = int;
using StateId = int;

struct Symbol {
    std::string name;
    int rank = 0;
    bool operator==(const Symbol&) const = default;
};

class RankedAlphabet {
public:
    RankedAlphabet() = default;
    // names must be unique and at least one symbol must be nullary
    explicit RankedAlphabet(std::vector<Symbol> symbols);

    const std::vector<Symbol>& symbols() const { return symbols_; }
    int size() const { return static_cast<int>(symbols_.size()); }
    const Symbol& operator[](SymbolId s) const { return symbols_.at(s); }
    int rank(SymbolId s) const { return symbols_.at(s).rank; }
    int maxRank() const;
    std::optional<SymbolId> find(std::string_view name) const;
    // throws ParseError for unknown names
    SymbolId id(std::string_view name) const;

    bool operator==(const RankedAlphabet& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<Symbol> symbols_;
};

// A tree over the alphabet, possibly with hole leaves. A context is a term
// with exactly one hole.
struct Term {
    static constexpr SymbolId kHole = -1;

    SymbolId symbol = kHole;
    std::vector<Term> children;

    bool isHole() const { return symbol == kHole; }
    bool operator==(const Term&) const = default;
    bool operator<(const Term& o) const {
        if (symbol != o.symbol) return symbol < o.symbol;
        return children < o.children;
    }
};

using Position = std::vector<int>;  // 0-based child indices from the root

// State labeling mirroring the shape of a term; a hole carries the exit state.
struct Run {
    StateId state = 0;
    std::vector<Run> children;

    bool operator==(const Run&) const = default;
    bool operator<(const Run& o) const {
        if (state != o.state) return state < o.state;
        return children < o.children;
    }
};

Term hole();
Term leaf(SymbolId s);
Term node(SymbolId s, std::vector<Term> children);

int holeCount(const Term& t);
bool isContext(const Term& t);
int height(const Term& t);
int size(const Term& t);
std::vector<Position> positions(const Term& t);
const Term& subtermAt(const Term& t, const Position& p);
Term replaceAt(const Term& t, const Position& p, Term z);
// position of the unique hole; throws if t is not a context
Position holePosition(const Term& c);

// c[z]: the hole of c replaced by z
Term substitute(const Term& c, const Term& z);
// c^0 = hole, c^(n+1) = c[c^n]
Term power(const Term& c, int n);

enum class TermKind : std::uint8_t { Trees, Contexts };

// All trees (or contexts) of height <= maxHeight, ordered by height, then
// symbol index, then (for contexts) hole index, then children in
// enumeration order.
std::vector<Term> enumerate(const RankedAlphabet& alphabet, TermKind kind, int maxHeight);

// Unbounded enumeration of all trees in the order of enumerate().
class TreeStream {
public:
    explicit TreeStream(const RankedAlphabet& alphabet);
    // nullptr once a finite tree language is exhausted; the pointer stays
    // valid only until the next call
    const Term* next();
    std::uint64_t produced() const { return produced_; }

private:
    void growLevel();

    RankedAlphabet alphabet_;
    std::vector<Term> all_;
    std::size_t cursor_ = 0;
    std::uint64_t produced_ = 0;
    int builtHeight_ = -1;
    std::size_t prevLevelStart_ = 0;
};

// name(child,...,child); nullary symbols bare; the hole is written []
Term parseTerm(const RankedAlphabet& alphabet, std::string_view text);
std::string formatTerm(const RankedAlphabet& alphabet, const Term& t);

}  // namespace wta
