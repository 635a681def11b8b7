#pragma once

#include <stdexcept>
#include <string>

namespace ktdom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid construction parameters or call arguments.
struct ParameterError : Error {
    using Error::Error;
};

// Operation invoked outside its mathematical domain (e.g. delta(G) < k).
struct DomainError : Error {
    using Error::Error;
};

// Instance exceeds the configured exact-search limits.
struct ResourceError : Error {
    using Error::Error;
};

// Per-instance time budget exhausted.
struct TimeoutError : Error {
    using Error::Error;
};

// A closed formula has an empty feasible set at this parameter point.
struct InapplicableError : Error {
    using Error::Error;
};

// Malformed graph/hypergraph text; carries the offending line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& message)
        : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

}  // namespace ktdom
