#ifndef JETPROLONG_ERRORS_HPP
#define JETPROLONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetprolong
{

// An index or a dimension lies outside the declared (n, m).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (kappa < 1, bad arity, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Product of two derivative symbols, which would leave the linear coefficient space.
struct LinearityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested entry was not computed.
struct LookupError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// An internal cross-check failed; indicates a bug rather than bad input.
struct VerificationError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace jetprolong

#endif
