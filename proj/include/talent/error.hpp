#pragma once

#include <stdexcept>
#include <string>

namespace talent {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad identifiers, unparsable documents, violated
// preconditions. The CLI maps this to exit code 2.
struct input_error : error {
    using error::error;
};

// The analysis itself refuses the input (e.g. chain statistics on a graph
// whose cycles are not disjoint, or a lattice enumeration over the vertex
// bound). CLI exit code 1.
struct refusal_error : error {
    using error::error;
};

// A rewrite search exhausted its state budget. Surfaces as an inconclusive
// verdict; CLI exit code 3.
struct budget_error : error {
    using error::error;
};

}  // namespace talent
