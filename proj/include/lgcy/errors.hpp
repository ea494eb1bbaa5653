#ifndef LGCY_ERRORS_HPP
#define LGCY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgcy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input violated the polynomial grammar or referenced an unknown name.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// Jacobian quotient is infinite: the critical locus is not isolated.
struct DegenerateSingularity : Error {
    using Error::Error;
};

struct NotQuasiHomogeneous : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

// Graded-subring machinery requires degree = variable count.
struct NotCalabiYau : Error {
    using Error::Error;
};

// Configurable S-pair/reduction budget was exhausted.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Socle-degree component of a normal form failed to be a multiple of the
// Hessian class; impossible for a correct engine on valid input.
struct ProportionalityViolation : Error {
    using Error::Error;
};

// separable_residue_oracle got a polynomial that is not a sum of univariate
// monomial parts.
struct NonSeparable : Error {
    using Error::Error;
};

struct InfiniteQuotient : Error {
    using Error::Error;
};

}  // namespace lgcy

#endif
