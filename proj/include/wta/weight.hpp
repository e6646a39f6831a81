#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wta {

using BigInt = boost::multiprecision::cpp_int;

// Distinguished elements that are not numbers. Which ones an algebra uses is
// up to the algebra (arctic uses NegInf as its zero, mat_n uses none).
enum class Mark : std::uint8_t { Zero, One, NegInf, PosInf };

// n' in the two-copy algebra
struct Primed {
    BigInt value;
    bool operator==(const Primed&) const = default;
    bool operator<(const Primed& o) const { return value < o.value; }
};

// finite subset of N, sorted and duplicate free
struct IntSet {
    std::vector<BigInt> items;
    bool operator==(const IntSet&) const = default;
    bool operator<(const IntSet& o) const { return items < o.items; }
};

// row-major square matrix, dimension fixed by the algebra
struct Matrix {
    std::vector<BigInt> entries;
    bool operator==(const Matrix&) const = default;
    bool operator<(const Matrix& o) const { return entries < o.entries; }
};

// finite language, sorted and duplicate free
struct WordSet {
    std::vector<std::string> words;
    bool operator==(const WordSet&) const = default;
    bool operator<(const WordSet& o) const { return words < o.words; }
};

// congruence class of a quotient algebra
struct ClassRef {
    int index = 0;
    bool operator==(const ClassRef&) const = default;
    bool operator<(const ClassRef& o) const { return index < o.index; }
};

// An element of some weight algebra. Values are kept in canonical form by the
// owning algebra, so structural equality is algebra equality.
class Weight {
public:
    using Value = std::variant<Mark, BigInt, Primed, IntSet, Matrix, WordSet, ClassRef>;

    Weight() : value_(Mark::Zero) {}
    Weight(Value v) : value_(std::move(v)) {}
    Weight(Mark m) : value_(m) {}
    Weight(BigInt n) : value_(std::move(n)) {}
    Weight(int n) : value_(BigInt(n)) {}
    Weight(Primed p) : value_(std::move(p)) {}
    Weight(IntSet s) : value_(std::move(s)) {}
    Weight(Matrix m) : value_(std::move(m)) {}
    Weight(WordSet w) : value_(std::move(w)) {}
    Weight(ClassRef c) : value_(c) {}

    const Value& value() const { return value_; }

    template <class T> bool is() const { return std::holds_alternative<T>(value_); }
    template <class T> const T& as() const { return std::get<T>(value_); }

    bool operator==(const Weight& o) const { return value_ == o.value_; }
    bool operator!=(const Weight& o) const { return !(value_ == o.value_); }
    bool operator<(const Weight& o) const { return value_ < o.value_; }

private:
    Value value_;
};

}  // namespace wta
