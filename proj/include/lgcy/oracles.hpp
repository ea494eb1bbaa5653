#ifndef LGCY_ORACLES_HPP
#define LGCY_ORACLES_HPP

#include <complex>

#include "lgcy/errors.hpp"
#include "lgcy/polynomial.hpp"

namespace lgcy {

// (1/2 pi i) \oint g/f' dz on |z| = radius by the uniform trapezoid rule
// (spectrally accurate for periodic analytic integrands). f univariate with
// its only critical point at the origin.
std::complex<double> contour_residue_oracle_1d(const Polynomial& f, const Polynomial& g,
                                               double radius = 1.0, int samples = 4096);

// Exact residue for separable f = sum_i c_i z_i^{d_i} and a monomial g:
// product over variables of [g_i = d_i - 2] / (c_i d_i).
// Throws NonSeparable unless every variable carries exactly one pure-power
// term of f and nothing else.
Rational separable_residue_oracle(const Polynomial& f, const Monomial& g);

}  // namespace lgcy

#endif
