#ifndef LGCY_MONODROMY_HPP
#define LGCY_MONODROMY_HPP

#include "lgcy/hodge.hpp"
#include "lgcy/milnor.hpp"

namespace lgcy {

// z nabla_z acts diagonally on the monomial Brieskorn frame with eigenvalue
// <alpha + 1, w> - 1; the monodromy eigenvalue is exp(2 pi i <alpha+1, w>),
// recorded as the exact angle <alpha+1, w> mod 1.
struct MonodromyEntry {
    Monomial monomial;
    Rational exponent;  // <alpha+1, w> - 1
    Rational angle;     // in [0, 1)
    bool invariant;     // angle == 0
};

struct MonodromySpectrum {
    std::vector<MonodromyEntry> entries;
    std::uint64_t invariant_dimension = 0;
};

MonodromySpectrum monodromy_spectrum(const MilnorRing& ring);

// Reflection point of the exponent multiset under mu-pairing duality:
// e + e' = N - 2 (equals the central charge exactly when sum q_i = 1).
Rational spectrum_duality_point(const MilnorRing& ring);

// multiset {exponent} invariant under x -> reflection - x
bool spectrum_symmetric_about(const MonodromySpectrum& spec, const Rational& reflection);

struct InvarianceReport {
    bool sets_equal = false;
    std::uint64_t invariant_dim = 0;
    std::uint64_t subring_dim = 0;
    // realness of the invariant subspace follows from the monodromy being a
    // real operator (eigenvalue-1 eigenspace); recorded, not re-derived here
    std::string realness_note;
};

// The monodromy-invariant monomials coincide with the graded-subring basis
// (d = N case).
InvarianceReport invariance_realness_report(const MilnorRing& ring, const GradedSubring& sub);

}  // namespace lgcy

#endif
