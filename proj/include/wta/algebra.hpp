#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wta/errors.hpp"
#include "wta/weight.hpp"

namespace wta {

enum class Tri : std::uint8_t { False, True, Unknown };

inline bool isTrue(Tri t) { return t == Tri::True; }
const char* toString(Tri t);

struct Flags {
    Tri commutative = Tri::Unknown;
    Tri left_distributive = Tri::Unknown;
    Tri right_distributive = Tri::Unknown;
    Tri idempotent = Tri::Unknown;
    Tri monotonic = Tri::Unknown;
    Tri past_finite = Tri::Unknown;
    Tri additively_locally_finite = Tri::Unknown;
};

// index i and period p of b: i*b = (i+p)*b with both minimal
struct AdditiveOrder {
    enum class Kind : std::uint8_t { Finite, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    std::uint64_t index = 0;
    std::uint64_t period = 0;

    static AdditiveOrder finite(std::uint64_t i, std::uint64_t p) { return {Kind::Finite, i, p}; }
    static AdditiveOrder infinite() { return {Kind::Infinite, 0, 0}; }
    static AdditiveOrder unknown() { return {Kind::Unknown, 0, 0}; }
    bool operator==(const AdditiveOrder&) const = default;
};

// A computable strong bimonoid. Elements are Weight values in canonical form;
// every operation is pure.
class Algebra {
public:
    virtual ~Algebra() = default;

    virtual std::string kind() const = 0;
    // JSON text {"kind": ..., "params": {...}} accepted by makeAlgebra
    virtual std::string descriptor() const = 0;

    virtual Weight zero() const = 0;
    virtual Weight one() const = 0;
    virtual Weight add(const Weight& a, const Weight& b) const = 0;
    virtual Weight mul(const Weight& a, const Weight& b) const = 0;

    virtual bool hasOrder() const { return false; }
    // throws NotApplicable when unordered
    virtual bool leq(const Weight& a, const Weight& b) const;
    // all a with a <= b, if the algebra can enumerate them
    virtual std::optional<std::vector<Weight>> past(const Weight&) const { return std::nullopt; }
    // all elements, for finite algebras
    virtual std::optional<std::vector<Weight>> carrier() const { return std::nullopt; }
    virtual AdditiveOrder additiveOrderHint(const Weight&) const { return AdditiveOrder::unknown(); }

    // a handful of elements (always containing zero and one) used for axiom
    // checks and as candidate class representatives
    virtual std::vector<Weight> samples() const = 0;

    // weight literal as JSON text, and back; decode rejects non-elements
    virtual std::string encode(const Weight& w) const = 0;
    virtual Weight decode(std::string_view json) const = 0;

    virtual const Flags& flags() const = 0;

    // encode() without the quotes of a string literal
    std::string show(const Weight& w) const;
    bool isZero(const Weight& w) const { return w == zero(); }
    bool isOne(const Weight& w) const { return w == one(); }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

Weight sum(const Algebra& alg, const std::vector<Weight>& ws);
Weight product(const Algebra& alg, const std::vector<Weight>& ws);
// n*b = b + ... + b (n times), by doubling
Weight multiple(const Algebra& alg, const BigInt& n, const Weight& b);
// strict order: leq and not equal
bool less(const Algebra& alg, const Weight& a, const Weight& b);

struct Homomorphism {
    AlgebraPtr source;
    AlgebraPtr target;
    std::function<Weight(const Weight&)> map;

    Weight operator()(const Weight& w) const { return map(w); }
};

Homomorphism identity(AlgebraPtr alg);

namespace algebras {
AlgebraPtr boolean();
AlgebraPtr naturals();
AlgebraPtr arctic();
AlgebraPtr tropical();
AlgebraPtr lcm();
AlgebraPtr fset();
AlgebraPtr matrices(int n);
AlgebraPtr flang(std::string alphabet);
AlgebraPtr plusplus();
AlgebraPtr truncatedPlus();
// B' = N+ u {0,1} with the given + (plus|max) and x (plus|affine: a+b+2ab)
AlgebraPtr induced(std::string add, std::string mul);
// N+ u N'+ u {0,1}: join on 0 < 1 < 1 < 2 < ... < 1' < 2' < ..., + on each copy
AlgebraPtr twoChain();
}  // namespace algebras

// Parses a descriptor such as {"kind":"mat_n","params":{"n":2}}.
AlgebraPtr makeAlgebra(std::string_view descriptorJson);

// Same algebra with some flags replaced; used to test flag checking.
AlgebraPtr withFlags(AlgebraPtr alg, Flags flags);

struct Violation {
    std::string law;
    std::vector<Weight> witness;
};

std::vector<Violation> checkAxioms(const Algebra& alg, const std::vector<Weight>& samples);

AdditiveOrder additiveOrder(const Algebra& alg, const Weight& b, std::uint64_t fuel);

struct QuotientKind {
    enum class Kind : std::uint8_t { Threshold, Modulo, PastCut };
    Kind kind = Kind::Threshold;
    unsigned n = 0;
    Weight cut;

    static QuotientKind threshold(unsigned n) { return {Kind::Threshold, n, {}}; }
    static QuotientKind modulo(unsigned n) { return {Kind::Modulo, n, {}}; }
    static QuotientKind pastCut(Weight b) { return {Kind::PastCut, 0, std::move(b)}; }
};

struct Quotient {
    AlgebraPtr algebra;
    Homomorphism hom;
    // class index -> representative in the source algebra
    std::vector<Weight> representatives;
};

Quotient quotient(AlgebraPtr alg, const QuotientKind& kind);

}  // namespace wta
