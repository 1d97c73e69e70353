#ifndef HAMTILES_ERRORS_HPP
#define HAMTILES_ERRORS_HPP

#include <stdexcept>

namespace hamtiles {

/// Raised when an operation is handed inputs of incompatible or
/// out-of-range dimension (mismatched vector lengths, permutation degree
/// vs. tile dimension, ambient dimension outside the supported range).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised on malformed textual input (cycle notation, tile text).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a search is refused because its state space would be too
/// large (complement search above the ambient-dimension guard).
struct SearchLimitError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace hamtiles

#endif
