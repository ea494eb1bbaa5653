#ifndef LGCY_QUOTIENT_HPP
#define LGCY_QUOTIENT_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "lgcy/groebner.hpp"

namespace lgcy {

// Standard monomials of a quotient ring: the complement of the leading-term
// ideal, sorted by (total degree, grevlex). `finite` is set iff every
// variable has a pure-power leading term.
struct QuotientBasis {
    std::vector<Monomial> monomials;
    bool finite = false;
    std::optional<std::uint64_t> cap;
};

bool quotient_is_finite(const GroebnerBasis& gb);

// Finite case: the complete complement of the leading-term ideal. Infinite
// case: monomials up to the cap; throws InfiniteQuotient when no cap given.
QuotientBasis standard_monomials(const GroebnerBasis& gb,
                                 std::optional<std::uint64_t> degree_cap = std::nullopt);

// Counts standard monomials by total degree; values sum to mu.
std::map<std::uint64_t, std::uint64_t> graded_dimensions(const QuotientBasis& qb);

}  // namespace lgcy

#endif
