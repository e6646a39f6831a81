#pragma once

#include <stdexcept>

namespace wta {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition of a procedure does not hold for the given input.
struct NotApplicable : std::logic_error {
    using std::logic_error::logic_error;
};

// The automaton has no useful state, so its semantics is constantly zero.
struct EmptySemantics : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wta
