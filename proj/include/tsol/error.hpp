#ifndef TSOL_ERROR_HPP
#define TSOL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tsol {

// Base class for all recoverable errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: .trn files, choice-table files, bad matrices.
struct parse_error : error {
    using error::error;
};

// A name (solution, axiom, verification) not present in a registry.
struct unknown_name_error : error {
    using error::error;
};

// A computation that is well-posed but failed to produce a value,
// e.g. evaluating the hat operator where it is not well-defined.
struct evaluation_error : error {
    using error::error;
};

// An operation refused because it exceeds a configured size limit.
struct resource_limit_error : error {
    using error::error;
};

// Internal consistency failure. Indicates a bug, never bad input;
// certification checks inside the equilibrium solver throw this.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace tsol

#endif
